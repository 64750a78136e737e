#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moduli/divisor_algebra.hpp"

namespace moduli {

// Minimal surface invariants needed by the pencil pipeline.  chi_top is
// Noether's 12 chi(O) - K^2.
struct SurfaceData {
    long long chi_O = 0;
    long long K2 = 0;
    std::string label;

    long long chi_top() const { return 12 * chi_O - K2; }
};

// A pencil of curves of class C on the surface, with n_marked of the C^2
// base points promoted to markings.  star_star records that the standard
// transversality/stability package for such pencils has been checked, which
// is an input hypothesis here, never something this code derives.
struct PencilData {
    SurfaceData surface;
    long long C2 = 0;
    long long CK = 0;
    long long n_marked = 0;
    bool star_star = false;

    long long genus() const; // 1 + (C^2 + C.K)/2, ParityError when odd
};

// A fixed auxiliary curve D on the surface: its intersection with the
// pencil class and with the surface canonical class.
struct AuxCurveData {
    long long DC = 0;
    long long DK = 0;
};

// Input for the k-fold marked lift: the base pencil, its curve class
// gamma, k auxiliary curves, and their pairwise intersection numbers
// (pairwise[a][b] = D_a . D_b, symmetric; the diagonal is ignored).
struct ThetaInput {
    PencilData pencil;
    CurveClass gamma;
    std::vector<AuxCurveData> aux;
    std::vector<std::vector<long long>> pairwise;

    long long k() const { return static_cast<long long>(aux.size()); }
    void validate() const;
    long long pairwise_at(std::size_t a, std::size_t b) const;
};

enum class VerdictKind { Uniruled, KodairaBound, Inconclusive };

std::string verdict_kind_name(VerdictKind k);

// Outcome of a positivity certificate.  k_value is the curve's pairing with
// the relevant canonical class, witness the positivity hypothesis pairing
// when one was computed, bound the Kodaira-dimension bound when applicable.
// echo restates the inputs so a report is self-contained.
struct CertificateVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    Rat k_value{};
    std::optional<Rat> witness;
    std::optional<long long> bound;
    std::string echo;
};

// 1 + (C^2 + C.K)/2; ParityError when C^2 + C.K is odd.
long long genus_from_adjunction(long long C2, long long CK);

// 3g - 3 + n, g >= 2.
long long moduli_dim(long long g, long long n);

// Class of a one-parameter family over P^1: total space invariants in,
// generator pairings out.
//   lambda      = chi_O_total - (1 - g)
//   delta_total = chi_top_total - 2 (2 - 2g)
//   psi_i       = -(s_i^2) for each disjoint section
// Declares nothing about individual boundary values (assume_rest_zero off).
CurveClass test_curve_from_euler(long long g, long long chi_O_total, long long chi_top_total,
                                 const std::vector<long long>& section_self_ints);

// Full pipeline for a pencil on a surface: blow up the C^2 base points,
// fiber over P^1, mark n_marked exceptional sections.  Yields
//   lambda      = chi_O + g - 1
//   delta_total = 12 chi_O - K^2 + C^2 + 4 (g - 1)
//   psi_i       = 1
// with delta_{1:empty} declared zero.  Requires star_star.
CurveClass pencil_curve_class(const PencilData& p, bool assume_rest_zero = true);

// Pairing of the one-point lift with the canonical class upstairs, from the
// pairing gamma_K = (gamma . K_{g,n}) downstairs:  DC (gamma_K + 2) + DK.
Rat lift_one_point(const Rat& gamma_K, const AuxCurveData& aux);

// Componentwise one-point lift of a curve class.  Pulled-back generator
// values scale by DC, the new marking gets psi = DK + 2 DC, every
// delta_{0:{i,n+1}} is declared zero, and each declared (i, S) transports
// to (i, S) scaled with its companion (i, S + {n+1}) declared zero (the new
// marking rides the complementary component; exact for declared-vanishing
// sets, which is the only use the shipped scenarios make of it).
CurveClass lift_one_point_components(const CurveClass& gamma, const AuxCurveData& aux);

// Pairing of the k-fold lift with the canonical class upstairs:
//   prod(DC_i) * (gamma_K + 2k + sum DK_i/DC_i) - sum_{a<b} D_a.D_b
Rat theta_K(const ThetaInput& in, const Rat& gamma_K);

// Componentwise k-fold lift.  New markings get
//   psi_{n+j} = prod_{l != j} DC_l * (DK_j + 2 DC_j) + sum_{a<b} D_a.D_b
// the collision boundaries delta_{0:{n+a,n+b}} are declared D_a.D_b, the
// mixed delta_{0:{i,n+j}} and the delta_{1:T} over new markings are
// declared zero, and delta_total picks up the declared collision values.
// Pairing this with the canonical class is NOT algebraically identical to
// theta_K for k >= 2; callers surface that difference as a diagnostic
// instead of reconciling it (see the reproduction harness).
CurveClass theta_components(const ThetaInput& in);

// Certificate via the gluing route: gamma lives on (g-1, n+2), the target
// is (g, n).  With w = (gamma . theta^* delta_irr) and v = (gamma . theta^* K):
//   w > 0 and v < 0   -> Uniruled
//   w > 0 and v = 0   -> KodairaBound, bound = dim(g-1, n+2) - 1
//   otherwise         -> Inconclusive
// Nefness of gamma is the caller's declared hypothesis.
CertificateVerdict glued_certificate(const CurveClass& gamma, const ModuliSig& target);

// Certificate via a directly computed (curve . K) value: Uniruled exactly
// when the curve is declared nef and the value is negative.
CertificateVerdict direct_certificate(const Rat& value, bool nef_declared);

} // namespace moduli
