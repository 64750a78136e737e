#include "moduli/rational.hpp"

#include <cctype>

#include "moduli/errors.hpp"

namespace moduli {

std::string rat_to_string(const Rat& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

// Signed decimal integer; returns false on any other shape.
bool parse_int(const std::string& s, Int& out) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && s[pos] == '-') {
        negative = true;
        ++pos;
    }
    if (pos == s.size()) return false;
    Int value = 0;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
        value = value * 10 + (s[pos] - '0');
    }
    out = negative ? Int(-value) : value;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    const std::size_t slash = text.find('/');
    Int num;
    if (slash == std::string::npos) {
        if (!parse_int(text, num)) throw ParseError("not a rational: '" + text + "'");
        return Rat(num);
    }
    Int den;
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
        throw ParseError("not a rational: '" + text + "'");
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    if (den < 0) throw ParseError("denominator must be positive: '" + text + "'");
    return Rat(num) / Rat(den);
}

} // namespace moduli
