#include "moduli/curve_numerics.hpp"

#include <sstream>

namespace moduli {

long long genus_from_adjunction(long long C2, long long CK) {
    const long long s = C2 + CK;
    if (s % 2 != 0)
        throw ParityError("C^2 + C.K = " + std::to_string(s) + " is odd, no integer genus");
    return 1 + s / 2;
}

long long moduli_dim(long long g, long long n) {
    if (g < 2) throw Error("moduli_dim needs g >= 2");
    if (n < 0) throw Error("moduli_dim needs n >= 0");
    return 3 * g - 3 + n;
}

long long PencilData::genus() const { return genus_from_adjunction(C2, CK); }

void ThetaInput::validate() const {
    if (aux.empty()) throw Error("theta input needs k >= 1 auxiliary curves");
    if (!pencil.star_star) throw StarStarRequiredError("theta input needs the (**) package");
    for (const auto& a : aux)
        if (a.DC < 1) throw Error("auxiliary curve needs (D.C) >= 1");
    const std::size_t k = aux.size();
    if (pairwise.size() != k) throw Error("pairwise matrix must be k x k");
    for (const auto& row : pairwise)
        if (row.size() != k) throw Error("pairwise matrix must be k x k");
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            if (pairwise[a][b] != pairwise[b][a]) throw Error("pairwise matrix must be symmetric");
            if (pairwise[a][b] < 0) throw Error("pairwise intersections must be >= 0");
        }
    ModuliSig expected(pencil.genus(), pencil.n_marked);
    if (!(gamma.sig == expected))
        throw SignatureMismatchError("theta input: gamma signature does not match the pencil");
}

long long ThetaInput::pairwise_at(std::size_t a, std::size_t b) const { return pairwise[a][b]; }

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Uniruled: return "Uniruled";
        case VerdictKind::KodairaBound: return "KodairaBound";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    throw Error("unreachable verdict kind");
}

CurveClass test_curve_from_euler(long long g, long long chi_O_total, long long chi_top_total,
                                 const std::vector<long long>& section_self_ints) {
    ModuliSig sig(g, static_cast<long long>(section_self_ints.size()));
    CurveClass c(sig);
    c.assume_rest_zero = false;
    c.lambda = chi_O_total - (1 - g);
    c.delta_total = chi_top_total - 2 * (2 - 2 * g);
    for (std::size_t i = 0; i < section_self_ints.size(); ++i)
        c.set_psi(static_cast<int>(i + 1), Rat(-section_self_ints[i]));
    return c;
}

CurveClass pencil_curve_class(const PencilData& p, bool assume_rest_zero) {
    if (!p.star_star)
        throw StarStarRequiredError("pencil without the declared (**) package");
    if (p.C2 < 1) throw Error("pencil needs C^2 >= 1");
    if (p.n_marked < 0 || p.n_marked > p.C2)
        throw Error("pencil needs 0 <= n_marked <= C^2");
    const long long g = p.genus();
    if (g < 2) throw Error("pencil genus must be >= 2, got " + std::to_string(g));

    // Blowing up the C^2 base points adds C^2 to the Euler number and fixes
    // chi(O); the marked sections are the (-1)-exceptionals, so psi_i = 1.
    CurveClass c = test_curve_from_euler(
        g, p.surface.chi_O, p.surface.chi_top() + p.C2,
        std::vector<long long>(static_cast<std::size_t>(p.n_marked), -1));
    c.declare_delta(1, {}, 0);
    c.assume_rest_zero = assume_rest_zero;
    return c;
}

Rat lift_one_point(const Rat& gamma_K, const AuxCurveData& aux) {
    if (aux.DC < 1) throw Error("auxiliary curve needs (D.C) >= 1");
    return Rat(aux.DC) * (gamma_K + 2) + aux.DK;
}

CurveClass lift_one_point_components(const CurveClass& gamma, const AuxCurveData& aux) {
    if (aux.DC < 1) throw Error("auxiliary curve needs (D.C) >= 1");
    ModuliSig up(gamma.sig.g, gamma.sig.n + 1);
    const int newm = static_cast<int>(gamma.sig.n) + 1;
    const Rat scale(aux.DC);

    CurveClass c(up);
    c.assume_rest_zero = gamma.assume_rest_zero;
    c.lambda = scale * gamma.lambda;
    for (const auto& [m, v] : gamma.psi) c.set_psi(m, scale * v);
    c.set_psi(newm, Rat(aux.DK + 2 * aux.DC));
    c.delta_total = scale * gamma.delta_total;
    for (const auto& [idx, v] : gamma.delta_known) {
        c.declare_delta(idx.i, idx.S, scale * v);
        MarkSet with_new = idx.S;
        with_new.push_back(newm);
        c.declare_delta(idx.i, std::move(with_new), 0);
    }
    for (int i = 1; i <= gamma.sig.n; ++i) c.declare_delta(0, {i, newm}, 0);
    return c;
}

Rat theta_K(const ThetaInput& in, const Rat& gamma_K) {
    in.validate();
    Rat prod(1);
    Rat bracket = gamma_K + 2 * in.k();
    for (const auto& a : in.aux) {
        prod *= a.DC;
        bracket += Rat(a.DK) / Rat(a.DC);
    }
    Rat collisions(0);
    for (std::size_t a = 0; a < in.aux.size(); ++a)
        for (std::size_t b = a + 1; b < in.aux.size(); ++b) collisions += in.pairwise_at(a, b);
    return prod * bracket - collisions;
}

CurveClass theta_components(const ThetaInput& in) {
    in.validate();
    const long long n = in.gamma.sig.n;
    const long long k = in.k();
    if (k > 16) throw TooLargeError("theta lift refuses k > 16");
    ModuliSig up(in.gamma.sig.g, n + k);

    Rat prod(1);
    for (const auto& a : in.aux) prod *= a.DC;
    Rat collisions(0);
    for (std::size_t a = 0; a < in.aux.size(); ++a)
        for (std::size_t b = a + 1; b < in.aux.size(); ++b) collisions += in.pairwise_at(a, b);

    CurveClass c(up);
    c.assume_rest_zero = in.gamma.assume_rest_zero;
    c.lambda = prod * in.gamma.lambda;
    for (const auto& [m, v] : in.gamma.psi) c.set_psi(m, prod * v);
    for (std::size_t j = 0; j < in.aux.size(); ++j) {
        Rat others(1);
        for (std::size_t l = 0; l < in.aux.size(); ++l)
            if (l != j) others *= in.aux[l].DC;
        c.set_psi(static_cast<int>(n + 1 + j),
                  others * Rat(in.aux[j].DK + 2 * in.aux[j].DC) + collisions);
    }
    c.delta_total = prod * in.gamma.delta_total + collisions;

    // Declared boundary values transport with every way of adding new
    // markings on the complementary side.
    const unsigned long masks = 1ul << k;
    for (const auto& [idx, v] : in.gamma.delta_known) {
        c.declare_delta(idx.i, idx.S, prod * v);
        for (unsigned long mask = 1; mask < masks; ++mask) {
            MarkSet with_new = idx.S;
            for (long long b = 0; b < k; ++b)
                if (mask & (1ul << b)) with_new.push_back(static_cast<int>(n + 1 + b));
            c.declare_delta(idx.i, std::move(with_new), 0);
        }
    }
    for (int i = 1; i <= n; ++i)
        for (long long j = 1; j <= k; ++j)
            c.declare_delta(0, {i, static_cast<int>(n + j)}, 0);
    for (std::size_t a = 0; a < in.aux.size(); ++a)
        for (std::size_t b = a + 1; b < in.aux.size(); ++b)
            c.declare_delta(0, {static_cast<int>(n + 1 + a), static_cast<int>(n + 1 + b)},
                            Rat(in.pairwise_at(a, b)));
    for (unsigned long mask = 1; mask < masks; ++mask) {
        MarkSet T;
        for (long long b = 0; b < k; ++b)
            if (mask & (1ul << b)) T.push_back(static_cast<int>(n + 1 + b));
        c.declare_delta(1, std::move(T), 0);
    }
    return c;
}

CertificateVerdict glued_certificate(const CurveClass& gamma, const ModuliSig& target) {
    ModuliSig source(target.g - 1, target.n + 2);
    if (!(gamma.sig == source))
        throw SignatureMismatchError("glued certificate for (" + std::to_string(target.g) + "," +
                                     std::to_string(target.n) + ") needs gamma on (" +
                                     std::to_string(source.g) + "," + std::to_string(source.n) +
                                     ")");
    const Rat w = pair(gamma, gluing_pullback_delta_irr(target));
    const Rat v = pair(gamma, gluing_pullback_K(target));

    CertificateVerdict out;
    out.k_value = v;
    out.witness = w;
    if (w > 0 && v < 0) {
        out.kind = VerdictKind::Uniruled;
    } else if (w > 0 && v == 0) {
        out.kind = VerdictKind::KodairaBound;
        out.bound = source.dim() - 1;
    }
    std::ostringstream echo;
    echo << "glued certificate: gamma on (" << source.g << "," << source.n << ") against ("
         << target.g << "," << target.n << "); (gamma . theta* delta_irr) = " << rat_to_string(w)
         << ", (gamma . theta* K) = " << rat_to_string(v);
    out.echo = echo.str();
    return out;
}

CertificateVerdict direct_certificate(const Rat& value, bool nef_declared) {
    CertificateVerdict out;
    out.k_value = value;
    if (nef_declared && value < 0) out.kind = VerdictKind::Uniruled;
    std::ostringstream echo;
    echo << "direct certificate: (curve . K) = " << rat_to_string(value) << ", nef "
         << (nef_declared ? "declared" : "not declared");
    out.echo = echo.str();
    return out;
}

} // namespace moduli
