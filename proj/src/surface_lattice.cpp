#include "moduli/surface_lattice.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace moduli {

Lattice Lattice::blowup_of_plane(int r) {
    if (r < 0) throw Error("blow-up lattice needs r >= 0");
    Lattice lat;
    lat.kind = Kind::BlowupOfPlane;
    lat.exceptional = r;
    return lat;
}

Lattice Lattice::quadric() { return Lattice{}; }

LatticeClass::LatticeClass(Lattice lat, std::vector<long long> c)
    : lattice(lat), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != lattice.rank())
        throw Error("lattice class needs " + std::to_string(lattice.rank()) +
                    " coefficients, got " + std::to_string(coeffs.size()));
}

namespace {

void require_same_lattice(const LatticeClass& a, const LatticeClass& b) {
    if (!(a.lattice == b.lattice)) throw LatticeMismatchError("classes on different lattices");
}

} // namespace

LatticeClass operator+(LatticeClass a, const LatticeClass& b) {
    require_same_lattice(a, b);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
}

LatticeClass operator-(LatticeClass a, const LatticeClass& b) {
    require_same_lattice(a, b);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
    return a;
}

LatticeClass operator-(LatticeClass a) {
    for (auto& c : a.coeffs) c = -c;
    return a;
}

long long intersect(const LatticeClass& a, const LatticeClass& b) {
    require_same_lattice(a, b);
    if (a.lattice.kind == Lattice::Kind::Quadric)
        return a.coeffs[0] * b.coeffs[1] + a.coeffs[1] * b.coeffs[0];
    long long acc = a.coeffs[0] * b.coeffs[0];
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) acc -= a.coeffs[i] * b.coeffs[i];
    return acc;
}

LatticeClass canonical_class(const Lattice& lat) {
    if (lat.kind == Lattice::Kind::Quadric) return LatticeClass(lat, {-2, -2});
    std::vector<long long> c(static_cast<std::size_t>(lat.rank()), 1);
    c[0] = -3;
    return LatticeClass(lat, std::move(c));
}

long long arithmetic_genus(const LatticeClass& c) {
    const long long c2 = intersect(c, c);
    const long long ck = intersect(c, canonical_class(c.lattice));
    if ((c2 + ck) % 2 != 0)
        throw ParityError("C^2 + C.K = " + std::to_string(c2 + ck) + " is odd");
    return 1 + (c2 + ck) / 2;
}

long long degree(const LatticeClass& c, const LatticeClass& hyperplane) {
    return intersect(c, hyperplane);
}

std::vector<LatticeClass> enumerate_lines(const Lattice& lat) {
    if (lat.kind != Lattice::Kind::BlowupOfPlane)
        throw LatticeMismatchError("line enumeration needs a plane blow-up lattice");
    if (lat.exceptional > 8)
        throw UnsupportedRankError("line enumeration supports r <= 8, got r = " +
                                   std::to_string(lat.exceptional));
    // l = a L - sum b_i E_i with a^2 - sum b_i^2 = -1 and 3a - sum b_i = 1.
    // |a| <= 6 suffices for r <= 8 (the classical counts confirm it), and
    // then sum b_i^2 = a^2 + 1 <= 37 caps each |b_i|.
    const int r = lat.exceptional;
    std::vector<LatticeClass> out;
    std::vector<long long> b(static_cast<std::size_t>(r), 0);
    std::function<void(int, long long, long long, long long)> search =
        [&](int pos, long long a, long long sq_left, long long sum_left) {
            const long long m = r - pos;
            if (m == 0) {
                if (sq_left != 0 || sum_left != 0) return;
                std::vector<long long> coeffs(static_cast<std::size_t>(r) + 1);
                coeffs[0] = a;
                for (int i = 0; i < r; ++i) coeffs[static_cast<std::size_t>(i) + 1] = -b[i];
                out.emplace_back(lat, std::move(coeffs));
                return;
            }
            if (sum_left * sum_left > m * sq_left) return; // Cauchy-Schwarz
            for (long long v = -6; v <= 6; ++v) {
                if (v * v > sq_left) continue;
                b[static_cast<std::size_t>(pos)] = v;
                search(pos + 1, a, sq_left - v * v, sum_left - v);
            }
        };
    for (long long a = -6; a <= 6; ++a) search(0, a, a * a + 1, 3 * a - 1);
    std::sort(out.begin(), out.end(),
              [](const LatticeClass& x, const LatticeClass& y) { return x.coeffs < y.coeffs; });
    return out;
}

std::vector<std::pair<long long, long long>> hodge_index_pairs(long long c2) {
    std::vector<std::pair<long long, long long>> out;
    for (long long f2 = 1; 2 * f2 <= c2 - 2; ++f2) {
        const long long m2 = c2 - 2 - f2;
        if (f2 * m2 <= 1) out.emplace_back(f2, m2);
    }
    return out;
}

SplittingReport check_onenode_splittings(const LatticeClass& c) {
    if (!(c.lattice == Lattice::blowup_of_plane(6)))
        throw LatticeMismatchError("one-node splitting scan is for the cubic-surface lattice");

    SplittingReport rep;
    rep.c_squared = intersect(c, c);
    rep.genus_pairs = hodge_index_pairs(rep.c_squared);
    rep.case_a_contradiction = rep.genus_pairs.empty();
    rep.degenerate_input = rep.c_squared <= 0;

    const LatticeClass K = canonical_class(c.lattice);
    for (const auto& line : enumerate_lines(c.lattice)) {
        const long long bv = intersect(line, c - line);
        rep.line_values.emplace_back(line, bv);
        if (bv == 1) rep.line_splits.push_back(line);

        const LatticeClass F = -K - line; // F^2 = 0: the residual conic class
        const long long cv = intersect(F, c - F);
        rep.residual_values.emplace_back(F, cv);
        if (cv == 1) rep.residual_splits.push_back(F);
    }
    rep.exclusion_holds =
        rep.case_a_contradiction && rep.line_splits.empty() && rep.residual_splits.empty();
    return rep;
}

} // namespace moduli
