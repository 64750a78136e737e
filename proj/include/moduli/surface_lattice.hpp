#pragma once

#include <utility>
#include <vector>

#include "moduli/errors.hpp"

namespace moduli {

// The two intersection lattices the calculator knows: Pic of the plane
// blown up in r general points, basis (L, E_1..E_r) with form
// diag(1, -1, .., -1), and Pic of a smooth quadric, basis (f_1, f_2) with
// form [[0,1],[1,0]].
struct Lattice {
    enum class Kind { BlowupOfPlane, Quadric };

    Kind kind = Kind::Quadric;
    int exceptional = 0; // r, BlowupOfPlane only

    static Lattice blowup_of_plane(int r);
    static Lattice quadric();

    int rank() const { return kind == Kind::Quadric ? 2 : exceptional + 1; }

    friend bool operator==(const Lattice&, const Lattice&) = default;
};

struct LatticeClass {
    Lattice lattice;
    std::vector<long long> coeffs;

    LatticeClass(Lattice lat, std::vector<long long> c);

    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
};

LatticeClass operator+(LatticeClass a, const LatticeClass& b);
LatticeClass operator-(LatticeClass a, const LatticeClass& b);
LatticeClass operator-(LatticeClass a);

long long intersect(const LatticeClass& a, const LatticeClass& b);

// K = -3L + sum E_i, respectively K = (-2, -2).
LatticeClass canonical_class(const Lattice& lat);

// 1 + (C^2 + C.K)/2; ParityError when odd.
long long arithmetic_genus(const LatticeClass& c);

long long degree(const LatticeClass& c, const LatticeClass& hyperplane);

// All classes l with l^2 = -1 and l.K = -1 on a plane blow-up, r <= 8,
// sorted by coefficient vector.  Exhaustive search; the classical counts
// (1, 3, 6, 10, 16, 27, 56, 240 for r = 1..8) pin it down in the tests.
std::vector<LatticeClass> enumerate_lines(const Lattice& lat);

// Integer pairs (F^2, M^2), F^2 <= M^2, with both parts >= 1,
// F^2 + M^2 = c2 - 2 and F^2 * M^2 <= 1.  The index theorem forces the
// product bound for a one-node splitting C = F + M with F.M = 1, so the
// list is empty unless c2 = 4.
std::vector<std::pair<long long, long long>> hodge_index_pairs(long long c2);

// One-node splitting scan for a class c on the cubic-surface lattice
// (plane blown up in 6 points): can c split as F + M with F.M = 1 where
// (a) both parts have positive genus, (b) F is one of the 27 lines,
// (c) F = -K - l for a line l.
struct SplittingReport {
    long long c_squared = 0;
    std::vector<std::pair<long long, long long>> genus_pairs; // case (a) survivors
    bool case_a_contradiction = false;                        // no (a) splitting possible
    std::vector<std::pair<LatticeClass, long long>> line_values;     // (b): l . (c - l)
    std::vector<LatticeClass> line_splits;                           // (b) value = 1
    std::vector<std::pair<LatticeClass, long long>> residual_values; // (c): F . (c - F)
    std::vector<LatticeClass> residual_splits;                       // (c) value = 1
    bool degenerate_input = false;                                   // c^2 <= 0
    bool exclusion_holds = false;

    friend bool operator==(const SplittingReport&, const SplittingReport&) = default;
};

SplittingReport check_onenode_splittings(const LatticeClass& c);

} // namespace moduli
