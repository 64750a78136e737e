#include "moduli/divisor_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace moduli {

ModuliSig::ModuliSig(long long g_, long long n_) : g(g_), n(n_) {
    if (g < 2) throw Error("moduli signature needs g >= 2, got g = " + std::to_string(g));
    if (n < 0) throw Error("moduli signature needs n >= 0, got n = " + std::to_string(n));
}

MarkSet normalized_markings(MarkSet s, long long n) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int m : s)
        if (m < 1 || m > n)
            throw InvalidIndexError("marking " + std::to_string(m) + " outside 1.." +
                                    std::to_string(n));
    return s;
}

MarkSet mark_complement(const MarkSet& s, long long n) {
    MarkSet out;
    out.reserve(static_cast<std::size_t>(n) - s.size());
    std::size_t pos = 0;
    for (int m = 1; m <= n; ++m) {
        if (pos < s.size() && s[pos] == m) {
            ++pos;
        } else {
            out.push_back(m);
        }
    }
    return out;
}

std::string boundary_index_to_string(const BoundaryIndex& idx) {
    std::ostringstream os;
    os << "delta_{" << idx.i << ":{";
    for (std::size_t k = 0; k < idx.S.size(); ++k) {
        if (k) os << ",";
        os << idx.S[k];
    }
    os << "}}";
    return os.str();
}

namespace {

// |S| >= 2 when i = 0, |S| <= n - 2 when i = g.  The mirror representative
// satisfies the mirrored condition automatically, but both are checked so
// the contract does not rest on that equivalence.
bool size_bounds_ok(const ModuliSig& sig, long long i, std::size_t s_size) {
    if (i == 0 && s_size < 2) return false;
    if (i == sig.g && static_cast<long long>(s_size) > sig.n - 2) return false;
    return true;
}

} // namespace

std::optional<BoundaryIndex> try_normalize_boundary_index(const ModuliSig& sig, long long i,
                                                          MarkSet S) {
    if (i < 0 || i > sig.g) return std::nullopt;
    S = normalized_markings(std::move(S), sig.n);
    MarkSet Sc = mark_complement(S, sig.n);
    if (!size_bounds_ok(sig, i, S.size()) && !size_bounds_ok(sig, sig.g - i, Sc.size()))
        return std::nullopt;

    if (i < sig.g - i) return BoundaryIndex{i, std::move(S)};
    if (i > sig.g - i) return BoundaryIndex{sig.g - i, std::move(Sc)};
    if (S.size() < Sc.size()) return BoundaryIndex{i, std::move(S)};
    if (Sc.size() < S.size()) return BoundaryIndex{i, std::move(Sc)};
    return S <= Sc ? BoundaryIndex{i, std::move(S)} : BoundaryIndex{i, std::move(Sc)};
}

BoundaryIndex normalize_boundary_index(const ModuliSig& sig, long long i, MarkSet S) {
    auto idx = try_normalize_boundary_index(sig, i, std::move(S));
    if (!idx)
        throw InvalidIndexError("no valid boundary divisor delta_{" + std::to_string(i) +
                                ":S} on (" + std::to_string(sig.g) + "," + std::to_string(sig.n) +
                                ")");
    return *idx;
}

std::vector<BoundaryIndex> all_boundary_indices(const ModuliSig& sig) {
    if (sig.n > 16) throw TooLargeError("boundary enumeration refuses n > 16");
    std::vector<BoundaryIndex> out;
    const unsigned long masks = 1ul << sig.n;
    for (long long i = 0; 2 * i <= sig.g; ++i) {
        for (unsigned long mask = 0; mask < masks; ++mask) {
            MarkSet S;
            for (long long b = 0; b < sig.n; ++b)
                if (mask & (1ul << b)) S.push_back(static_cast<int>(b + 1));
            auto idx = try_normalize_boundary_index(sig, i, S);
            if (idx && idx->i == i && idx->S == S) out.push_back(std::move(*idx));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void DivisorClass::add_psi(int marking, const Rat& c) {
    if (marking < 1 || marking > sig.n)
        throw InvalidIndexError("psi marking " + std::to_string(marking) + " outside 1.." +
                                std::to_string(sig.n));
    Rat& slot = psi[marking];
    slot += c;
    if (slot == 0) psi.erase(marking);
}

void DivisorClass::add_delta(long long i, MarkSet S, const Rat& c) {
    BoundaryIndex idx = normalize_boundary_index(sig, i, std::move(S));
    Rat& slot = delta[idx];
    slot += c;
    if (slot == 0) delta.erase(idx);
}

Rat DivisorClass::psi_coeff(int marking) const {
    auto it = psi.find(marking);
    return it == psi.end() ? Rat(0) : it->second;
}

Rat DivisorClass::delta_coeff(const BoundaryIndex& idx) const {
    auto it = delta.find(idx);
    return it == delta.end() ? Rat(0) : it->second;
}

namespace {

void require_same_sig(const ModuliSig& a, const ModuliSig& b, const char* what) {
    if (!(a == b))
        throw SignatureMismatchError(std::string(what) + ": (" + std::to_string(a.g) + "," +
                                     std::to_string(a.n) + ") vs (" + std::to_string(b.g) + "," +
                                     std::to_string(b.n) + ")");
}

template <typename K>
void merge_scaled(std::map<K, Rat>& into, const std::map<K, Rat>& from, const Rat& scale) {
    for (const auto& [k, v] : from) {
        Rat& slot = into[k];
        slot += scale * v;
        if (slot == 0) into.erase(k);
    }
}

} // namespace

DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    require_same_sig(a.sig, b.sig, "divisor sum");
    a.lambda += b.lambda;
    a.delta_irr += b.delta_irr;
    merge_scaled(a.psi, b.psi, Rat(1));
    merge_scaled(a.delta, b.delta, Rat(1));
    return a;
}

DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    require_same_sig(a.sig, b.sig, "divisor difference");
    a.lambda -= b.lambda;
    a.delta_irr -= b.delta_irr;
    merge_scaled(a.psi, b.psi, Rat(-1));
    merge_scaled(a.delta, b.delta, Rat(-1));
    return a;
}

DivisorClass operator*(const Rat& c, DivisorClass a) {
    if (c == 0) return DivisorClass::zero(a.sig);
    a.lambda *= c;
    a.delta_irr *= c;
    for (auto& [k, v] : a.psi) v *= c;
    for (auto& [k, v] : a.delta) v *= c;
    return a;
}

void CurveClass::set_psi(int marking, const Rat& v) {
    if (marking < 1 || marking > sig.n)
        throw InvalidIndexError("psi marking " + std::to_string(marking) + " outside 1.." +
                                std::to_string(sig.n));
    if (v == 0) {
        psi.erase(marking);
    } else {
        psi[marking] = v;
    }
}

void CurveClass::declare_delta(long long i, MarkSet S, const Rat& v) {
    BoundaryIndex idx = normalize_boundary_index(sig, i, std::move(S));
    auto it = delta_known.find(idx);
    if (it != delta_known.end()) {
        if (it->second != v)
            throw Error("conflicting declared values for " + boundary_index_to_string(idx));
        return;
    }
    delta_known.emplace(std::move(idx), v);
}

Rat CurveClass::psi_value(int marking) const {
    auto it = psi.find(marking);
    return it == psi.end() ? Rat(0) : it->second;
}

std::optional<Rat> CurveClass::declared_delta(const BoundaryIndex& idx) const {
    auto it = delta_known.find(idx);
    if (it == delta_known.end()) return std::nullopt;
    return it->second;
}

Rat CurveClass::delta_irr_value() const {
    Rat rest = delta_total;
    for (const auto& [idx, v] : delta_known) rest -= v;
    if (assume_rest_zero) return rest;
    // Without the rest-zero assumption the split of the remainder between
    // delta_irr and the undeclared delta_{i:S} is unknown, unless nothing
    // is undeclared.
    for (const auto& idx : all_boundary_indices(sig))
        if (!delta_known.count(idx))
            throw UnknownBoundaryValueError("delta_irr value not derivable: " +
                                            boundary_index_to_string(idx) + " undeclared");
    return rest;
}

Rat pair(const CurveClass& c, const DivisorClass& d) {
    require_same_sig(c.sig, d.sig, "pairing");
    Rat acc = d.lambda * c.lambda;
    for (const auto& [m, coeff] : d.psi) acc += coeff * c.psi_value(m);
    for (const auto& [idx, coeff] : d.delta) {
        if (coeff == 0) continue;
        if (auto v = c.declared_delta(idx)) {
            acc += coeff * *v;
        } else if (!c.assume_rest_zero) {
            throw UnknownBoundaryValueError("pairing needs undeclared value of " +
                                            boundary_index_to_string(idx));
        }
    }
    if (d.delta_irr != 0) acc += d.delta_irr * c.delta_irr_value();
    return acc;
}

DivisorClass total_boundary(const ModuliSig& sig) {
    DivisorClass out(sig);
    out.delta_irr = 1;
    for (auto& idx : all_boundary_indices(sig)) out.delta[idx] = 1;
    return out;
}

DivisorClass canonical_class(const ModuliSig& sig) {
    DivisorClass out = Rat(-2) * total_boundary(sig);
    out.lambda = 13;
    for (int m = 1; m <= sig.n; ++m) out.add_psi(m, 1);
    out.add_delta(1, {}, -1);
    return out;
}

DivisorClass k_forgetful_correction(const ModuliSig& sig, long long k, ForgetfulVariant variant) {
    if (k < 1) throw Error("forgetful correction needs k >= 1");
    if (k > 16) throw TooLargeError("forgetful correction refuses k > 16");
    ModuliSig up(sig.g, sig.n + k);
    DivisorClass out(up);
    const Rat mixed = variant == ForgetfulVariant::MinusTwo ? Rat(-2) : Rat(-1);
    for (long long j = 1; j <= k; ++j) out.add_psi(static_cast<int>(sig.n + j), 1);
    for (long long a = 1; a <= k; ++a)
        for (long long b = a + 1; b <= k; ++b)
            out.add_delta(0, {static_cast<int>(sig.n + a), static_cast<int>(sig.n + b)}, -2);
    const unsigned long masks = 1ul << k;
    for (unsigned long mask = 1; mask < masks; ++mask) {
        MarkSet T;
        for (long long b = 0; b < k; ++b)
            if (mask & (1ul << b)) T.push_back(static_cast<int>(sig.n + 1 + b));
        out.add_delta(1, std::move(T), 1);
    }
    for (int i = 1; i <= sig.n; ++i)
        for (long long j = 1; j <= k; ++j)
            out.add_delta(0, {i, static_cast<int>(sig.n + j)}, mixed);
    return out;
}

DivisorClass gluing_pullback_delta_irr(const ModuliSig& sig) {
    ModuliSig src(sig.g - 1, sig.n + 2);
    DivisorClass out(src);
    out.delta_irr = 1;
    out.add_psi(static_cast<int>(sig.n + 1), -1);
    out.add_psi(static_cast<int>(sig.n + 2), -1);
    // delta_{i:{n+1}} for every i that names a divisor on the source; the
    // indices excluded by the size bounds simply do not exist there.
    for (long long i = 0; i <= src.g; ++i) {
        if (auto idx = try_normalize_boundary_index(src, i, {static_cast<int>(sig.n + 1)})) {
            Rat& slot = out.delta[*idx];
            slot += 1;
            if (slot == 0) out.delta.erase(*idx);
        }
    }
    return out;
}

DivisorClass gluing_pullback_K(const ModuliSig& sig) {
    ModuliSig src(sig.g - 1, sig.n + 2);
    DivisorClass out = Rat(-2) * total_boundary(src);
    out.lambda = 13;
    for (int m = 1; m <= sig.n; ++m) out.add_psi(m, 1);
    out.add_psi(static_cast<int>(sig.n + 1), 2);
    out.add_psi(static_cast<int>(sig.n + 2), 2);
    out.add_delta(1, {}, -1);
    out.add_delta(0, {static_cast<int>(sig.n + 1), static_cast<int>(sig.n + 2)}, -1);
    return out;
}

DivisorClass gluing_pullback(const ModuliSig& sig, const std::string& generator) {
    if (generator == "delta_irr") return gluing_pullback_delta_irr(sig);
    if (generator == "K") return gluing_pullback_K(sig);
    throw UnsupportedError("no gluing pullback formula for generator '" + generator + "'");
}

} // namespace moduli
