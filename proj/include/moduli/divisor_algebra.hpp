#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moduli/errors.hpp"
#include "moduli/rational.hpp"

namespace moduli {

// Signature (g, n) of a moduli space of stable n-pointed genus-g curves.
// The rational divisor class group is spanned by lambda, psi_1..psi_n,
// delta_irr and the delta_{i:S}; that family is known to be a free basis
// only for g >= 3, which basis_certified() reports.  g = 2 is accepted and
// merely flagged.
struct ModuliSig {
    long long g;
    long long n;

    ModuliSig(long long g_, long long n_);

    long long dim() const { return 3 * g - 3 + n; }
    bool basis_certified() const { return g >= 3; }

    friend bool operator==(const ModuliSig&, const ModuliSig&) = default;
};

// A set of markings, kept sorted and duplicate-free, values in 1..n.
using MarkSet = std::vector<int>;

// Sorts, deduplicates and bounds-checks a marking set against n.
MarkSet normalized_markings(MarkSet s, long long n);
MarkSet mark_complement(const MarkSet& s, long long n);

// Index (i, S) of a boundary divisor delta_{i:S}.  Since delta_{i:S} =
// delta_{g-i:S^c}, every divisor has two index representatives; the
// canonical one has i < g - i, with ties broken by smaller |S| and then by
// lexicographically smaller S.  Instances are only constructed through
// normalize_boundary_index, so a stored index is always canonical.
struct BoundaryIndex {
    long long i;
    MarkSet S;

    friend auto operator<=>(const BoundaryIndex&, const BoundaryIndex&) = default;
};

std::string boundary_index_to_string(const BoundaryIndex& idx);

// Validity: if i = 0 then |S| >= 2, if i = g then |S| <= n - 2; the mirror
// representative is checked as well.  Throws InvalidIndexError when both
// representatives violate the bounds.
BoundaryIndex normalize_boundary_index(const ModuliSig& sig, long long i, MarkSet S);
std::optional<BoundaryIndex> try_normalize_boundary_index(const ModuliSig& sig, long long i,
                                                          MarkSet S);

// Every canonical boundary index of (g, n), sorted.  Enumeration is
// exponential in n and refuses n > 16.
std::vector<BoundaryIndex> all_boundary_indices(const ModuliSig& sig);

// Divisor class with exact rational coefficients in the standard basis.
// psi and delta are sparse: an absent key means coefficient zero, and
// mutation through the helpers drops entries that become zero, so equality
// of classes is plain field equality.
struct DivisorClass {
    ModuliSig sig;
    Rat lambda{};
    std::map<int, Rat> psi;
    Rat delta_irr{};
    std::map<BoundaryIndex, Rat> delta;

    explicit DivisorClass(ModuliSig s) : sig(s) {}
    static DivisorClass zero(ModuliSig s) { return DivisorClass(s); }

    void add_psi(int marking, const Rat& c);
    void add_delta(long long i, MarkSet S, const Rat& c);
    Rat psi_coeff(int marking) const;
    Rat delta_coeff(const BoundaryIndex& idx) const;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(const Rat& c, DivisorClass a);

// Numerical class of a test curve: its exact pairings with the basis
// generators.  delta_total is the pairing with the full boundary
// delta = delta_irr + sum delta_{i:S}; delta_known holds the individually
// declared boundary pairings (typically a declared-vanishing set).
//
// When assume_rest_zero is set, every undeclared delta_{i:S} pairing is
// taken to be 0 and the delta_irr pairing is delta_total minus the declared
// values.  Otherwise a pairing that needs an undeclared boundary value,
// including the delta_irr value, which is no longer derivable from the
// total, fails loudly with UnknownBoundaryValueError.
struct CurveClass {
    ModuliSig sig;
    Rat lambda{};
    std::map<int, Rat> psi;
    Rat delta_total{};
    std::map<BoundaryIndex, Rat> delta_known;
    bool assume_rest_zero = true;

    explicit CurveClass(ModuliSig s) : sig(s) {}
    static CurveClass zero(ModuliSig s) { return CurveClass(s); }

    void set_psi(int marking, const Rat& v);
    // Declared values are statements of fact, not coefficients: declaring
    // the same index twice with different values is an error, and declared
    // zeroes are kept (declared is not the same as absent).
    void declare_delta(long long i, MarkSet S, const Rat& v);
    Rat psi_value(int marking) const;
    std::optional<Rat> declared_delta(const BoundaryIndex& idx) const;
    Rat delta_irr_value() const;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// Exact pairing of a curve class with a divisor class (same signature).
Rat pair(const CurveClass& c, const DivisorClass& d);

// 13 lambda + sum psi_i - 2 delta - delta_{1:empty}, fully expanded over
// the canonical boundary indices (so delta_{1:empty} carries -3).
DivisorClass canonical_class(const ModuliSig& sig);

// delta_irr + sum over canonical delta_{i:S}, all with coefficient 1.
DivisorClass total_boundary(const ModuliSig& sig);

// Coefficient convention for the delta_{0:{i,n+j}} terms of the forgetful
// correction below.  Two conventions are in circulation: -2, which is the
// default here, and -1, which is what composing the standard one-point
// pullback identities yields.  Every shipped reproduction pairs these terms
// against declared zeroes, so the choice is observationally neutral there;
// both are kept so the difference stays testable.
enum class ForgetfulVariant { MinusTwo, MinusOne };

// Correction term C on (g, n+k) such that K_{g,n+k} = pi^* K_{g,n} + C for
// the map forgetting the last k markings:
//   sum_j psi_{n+j}
//   - 2 sum_{a<b} delta_{0:{n+a,n+b}}
//   + sum_{T nonempty, T subset new} delta_{1:T}
//   + c * sum_{i<=n, j} delta_{0:{i,n+j}}      (c per ForgetfulVariant)
// For k = 1 this is psi_{n+1} - 2 sum_i delta_{0:{i,n+1}} + delta_{1:{n+1}}.
DivisorClass k_forgetful_correction(const ModuliSig& sig, long long k,
                                    ForgetfulVariant variant = ForgetfulVariant::MinusTwo);

// Pullbacks along the gluing map (g-1, n+2) -> (g, n) that identifies the
// last two markings into a node:
//   theta^* delta_irr = delta_irr - psi_{n+1} - psi_{n+2}
//                       + sum delta_{i:{n+1}}   (over the indices valid on
//                                                the glued-source signature)
//   theta^* K = 13 lambda + psi_1..psi_n + 2 psi_{n+1} + 2 psi_{n+2}
//               - 2 delta - delta_{1:empty} - delta_{0:{n+1,n+2}}
// Both classes live on (g-1, n+2).  Requires g - 1 >= 2.
DivisorClass gluing_pullback_delta_irr(const ModuliSig& sig);
DivisorClass gluing_pullback_K(const ModuliSig& sig);

// Only "delta_irr" and "K" have worked-out pullback formulas here; asking
// for any other generator is an UnsupportedError, never a guess.
DivisorClass gluing_pullback(const ModuliSig& sig, const std::string& generator);

} // namespace moduli
