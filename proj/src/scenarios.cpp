#include "moduli/scenarios.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "moduli/curve_numerics.hpp"
#include "moduli/divisor_algebra.hpp"
#include "moduli/dual_graph.hpp"
#include "moduli/errors.hpp"
#include "moduli/json_io.hpp"
#include "moduli/surface_lattice.hpp"

namespace moduli::repro {

namespace {

using nlohmann::json;

const json& req(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw MalformedScenarioError(std::string("missing parameter \"") + name + "\"");
    return j.at(name);
}

long long req_int(const json& j, const char* name) {
    const json& v = req(j, name);
    if (!v.is_number_integer())
        throw MalformedScenarioError(std::string("parameter \"") + name +
                                     "\" must be an integer");
    return v.get<long long>();
}

// Everything a scenario evaluator produces: named exact values, each with a
// formula expansion, plus free-form diagnostics.
struct Evaluation {
    std::map<std::string, std::pair<Value, std::string>> values;
    std::vector<std::pair<std::string, std::string>> diagnostics;
};

void put(Evaluation& ev, const std::string& key, Value v, std::string why) {
    ev.values[key] = {std::move(v), std::move(why)};
}

void put_pencil_class_values(Evaluation& ev, const PencilData& p, const CurveClass& gamma) {
    const long long g = p.genus();
    {
        std::ostringstream os;
        os << "1 + (C^2 + C.K)/2 = 1 + (" << p.C2 << " + " << p.CK << ")/2 = " << g;
        put(ev, "genus", Rat(g), os.str());
    }
    {
        std::ostringstream os;
        os << "chi_O + g - 1 = " << p.surface.chi_O << " + " << g << " - 1 = "
           << rat_to_string(gamma.lambda);
        put(ev, "lambda", gamma.lambda, os.str());
    }
    {
        std::ostringstream os;
        os << "12 chi_O - K^2 + C^2 + 4(g - 1) = " << 12 * p.surface.chi_O << " - "
           << p.surface.K2 << " + " << p.C2 << " + " << 4 * (g - 1) << " = "
           << rat_to_string(gamma.delta_total);
        put(ev, "delta", gamma.delta_total, os.str());
    }
    put(ev, "delta_irr", gamma.delta_irr_value(),
        "delta minus the declared boundary pairings");
    for (long long i = 1; i <= p.n_marked; ++i) {
        std::ostringstream key;
        key << "psi_" << i;
        put(ev, key.str(), gamma.psi_value(static_cast<int>(i)),
            "marked exceptional section, psi = -(section self-intersection) = 1");
    }
}

Rat put_K_pairing(Evaluation& ev, const CurveClass& gamma) {
    const Rat gK = pair(gamma, canonical_class(gamma.sig));
    Rat sum_psi(0);
    for (const auto& [m, v] : gamma.psi) {
        (void)m;
        sum_psi += v;
    }
    std::ostringstream os;
    os << "13 lambda + sum psi - 2 delta - delta_{1:empty} pairing = 13*"
       << rat_to_string(gamma.lambda) << " + " << rat_to_string(sum_psi) << " - 2*"
       << rat_to_string(gamma.delta_total) << " - 0 = " << rat_to_string(gK);
    put(ev, "K_pairing", gK, os.str());
    return gK;
}

void put_verdict(Evaluation& ev, const CertificateVerdict& v) {
    put(ev, "verdict_is_uniruled", v.kind == VerdictKind::Uniruled, v.echo);
    put(ev, "verdict_is_kodaira_bound", v.kind == VerdictKind::KodairaBound, v.echo);
    put(ev, "verdict_is_inconclusive", v.kind == VerdictKind::Inconclusive, v.echo);
    if (v.bound) {
        put(ev, "kodaira_bound", Rat(*v.bound),
            "dimension of the covering-family base: source moduli dimension minus one");
    }
}

std::vector<AuxCurveData> aux_from_params(const json& params) {
    const json& a = req(params, "aux");
    if (!a.is_array() || a.empty())
        throw MalformedScenarioError("\"aux\" must be a nonempty array");
    std::vector<AuxCurveData> aux;
    for (const json& e : a) aux.push_back({req_int(e, "DC"), req_int(e, "DK")});
    return aux;
}

std::vector<std::vector<long long>> pairwise_from_params(const json& params, std::size_t k) {
    std::vector<std::vector<long long>> pw(k, std::vector<long long>(k, 0));
    if (!params.contains("pairwise")) return pw;
    const json& m = params.at("pairwise");
    if (!m.is_array() || m.size() != k)
        throw MalformedScenarioError("\"pairwise\" must be a k x k integer matrix");
    for (std::size_t a = 0; a < k; ++a) {
        const json& row = m.at(a);
        if (!row.is_array() || row.size() != k)
            throw MalformedScenarioError("\"pairwise\" must be a k x k integer matrix");
        for (std::size_t b = 0; b < k; ++b) {
            if (!row.at(b).is_number_integer())
                throw MalformedScenarioError("\"pairwise\" entries must be integers");
            pw[a][b] = row.at(b).get<long long>();
        }
    }
    return pw;
}

Evaluation eval_pencil_certificate(const json& params) {
    Evaluation ev;
    const PencilData p = pencil_from_json(req(params, "pencil"));
    std::vector<AuxCurveData> aux = aux_from_params(params);
    auto pairwise = pairwise_from_params(params, aux.size());

    const CurveClass gamma = pencil_curve_class(p);
    put_pencil_class_values(ev, p, gamma);
    const Rat gK = put_K_pairing(ev, gamma);

    const ThetaInput in{p, gamma, std::move(aux), std::move(pairwise)};
    in.validate();
    const Rat tK = theta_K(in, gK);
    {
        Rat prod(1);
        Rat ratio_sum(0);
        for (const auto& a : in.aux) {
            prod *= a.DC;
            ratio_sum += Rat(a.DK) / Rat(a.DC);
        }
        Rat collisions(0);
        for (std::size_t a = 0; a < in.aux.size(); ++a)
            for (std::size_t b = a + 1; b < in.aux.size(); ++b)
                collisions += in.pairwise_at(a, b);
        std::ostringstream os;
        os << "prod DC * (K_pairing + 2k + sum DK/DC) - sum_{a<b} Da.Db = "
           << rat_to_string(prod) << " * (" << rat_to_string(gK) << " + " << 2 * in.k() << " + "
           << rat_to_string(ratio_sum) << ") - " << rat_to_string(collisions) << " = "
           << rat_to_string(tK);
        put(ev, "theta_K", tK, os.str());
    }

    const CurveClass comp = theta_components(in);
    const Rat compK = pair(comp, canonical_class(comp.sig));
    put(ev, "components_K_pairing", compK,
        "componentwise lift paired with the canonical class upstairs");
    const Rat cdelta = compK - tK;
    {
        std::ostringstream os;
        os << "components_K_pairing - theta_K = " << rat_to_string(compK) << " - ("
           << rat_to_string(tK) << ") = " << rat_to_string(cdelta);
        put(ev, "consistency_delta", cdelta, os.str());
    }

    put_verdict(ev, direct_certificate(tK, p.star_star));
    ev.diagnostics.emplace_back("certified_route", "theta_K");
    ev.diagnostics.emplace_back("components_K_pairing", rat_to_string(compK));
    ev.diagnostics.emplace_back("consistency_delta", rat_to_string(cdelta));
    return ev;
}

Evaluation eval_pencil_glue(const json& params) {
    Evaluation ev;
    const PencilData p = pencil_from_json(req(params, "pencil"));
    const ModuliSig target = sig_from_json(req(params, "target"));

    const CurveClass gamma = pencil_curve_class(p);
    put_pencil_class_values(ev, p, gamma);

    const Rat dirr = gamma.delta_irr_value();
    const Rat w = pair(gamma, gluing_pullback_delta_irr(target));
    const Rat v = pair(gamma, gluing_pullback_K(target));
    const int m1 = static_cast<int>(target.n) + 1;
    const int m2 = static_cast<int>(target.n) + 2;
    {
        const Rat rest = w - dirr + gamma.psi_value(m1) + gamma.psi_value(m2);
        std::ostringstream os;
        os << "delta_irr - psi_" << m1 << " - psi_" << m2
           << " + sum_i delta_{i:{" << m1 << "}} pairing = " << rat_to_string(dirr) << " - "
           << rat_to_string(gamma.psi_value(m1)) << " - " << rat_to_string(gamma.psi_value(m2))
           << " + " << rat_to_string(rest) << " = " << rat_to_string(w);
        put(ev, "w", w, os.str());
    }
    {
        Rat old_psi(0);
        for (int i = 1; i <= target.n; ++i) old_psi += gamma.psi_value(i);
        const Rat main_part = Rat(13) * gamma.lambda + old_psi +
                              Rat(2) * (gamma.psi_value(m1) + gamma.psi_value(m2)) -
                              Rat(2) * gamma.delta_total;
        const Rat rest = v - main_part;
        std::ostringstream os;
        os << "13 lambda + sum old psi + 2 psi_" << m1 << " + 2 psi_" << m2
           << " - 2 delta - delta_{1:empty} - delta_{0:{" << m1 << "," << m2
           << "}} pairing = 13*" << rat_to_string(gamma.lambda) << " + "
           << rat_to_string(old_psi) << " + 2 + 2 - 2*" << rat_to_string(gamma.delta_total)
           << " + (" << rat_to_string(rest) << ") = " << rat_to_string(v);
        put(ev, "v", v, os.str());
    }

    put_verdict(ev, glued_certificate(gamma, target));
    ev.diagnostics.emplace_back("source_signature",
                                "(" + std::to_string(gamma.sig.g) + "," +
                                    std::to_string(gamma.sig.n) + ")");
    return ev;
}

Evaluation eval_pencil_class(const json& params) {
    Evaluation ev;
    const PencilData p = pencil_from_json(req(params, "pencil"));
    const CurveClass gamma = pencil_curve_class(p);
    put_pencil_class_values(ev, p, gamma);
    put_K_pairing(ev, gamma);
    return ev;
}

Evaluation eval_quadric_pencils(const json& params) {
    Evaluation ev;
    const long long g_min = req_int(params, "g_min");
    const long long g_max = req_int(params, "g_max");
    if (g_min < 2 || g_max < g_min)
        throw MalformedScenarioError("quadric scan needs 2 <= g_min <= g_max");
    const Lattice lat = Lattice::quadric();
    for (long long g = g_min; g <= g_max; ++g) {
        const LatticeClass c(lat, {2, g + 1});
        const long long c2 = intersect(c, c);
        const long long ck = intersect(c, canonical_class(lat));
        {
            std::ostringstream key, os;
            key << "genus_g" << g;
            os << "adjunction for C = (2," << g + 1 << "): 1 + (" << c2 << " + " << ck
               << ")/2 = " << arithmetic_genus(c);
            put(ev, key.str(), Rat(arithmetic_genus(c)), os.str());
        }
        {
            std::ostringstream key, os;
            key << "base_points_g" << g;
            os << "C^2 = 2 * 2*(" << g + 1 << ") = " << c2
               << " base points of a pencil in |C|";
            put(ev, key.str(), Rat(c2), os.str());
        }
    }
    return ev;
}

Evaluation eval_lattice_lines(const json& params) {
    Evaluation ev;
    const long long r = req_int(params, "r");
    const Lattice lat = Lattice::blowup_of_plane(static_cast<int>(r));
    const std::vector<LatticeClass> lines = enumerate_lines(lat);
    const LatticeClass minus_K = -canonical_class(lat);
    bool all_genus_zero = true;
    bool all_degree_one = true;
    for (const auto& l : lines) {
        if (arithmetic_genus(l) != 0) all_genus_zero = false;
        if (degree(l, minus_K) != 1) all_degree_one = false;
    }
    {
        std::ostringstream os;
        os << "exhaustive search for l^2 = l.K = -1 on the plane blown up in " << r
           << " points found " << lines.size() << " classes";
        put(ev, "count", Rat(static_cast<long long>(lines.size())), os.str());
    }
    put(ev, "all_genus_zero", all_genus_zero, "adjunction on every enumerated class");
    put(ev, "all_degree_one", all_degree_one, "degree against -K of every enumerated class");
    return ev;
}

Evaluation eval_lattice_exclusion(const json& params) {
    Evaluation ev;
    const LatticeClass c = lattice_class_from_json(req(params, "class"));
    const SplittingReport rep = check_onenode_splittings(c);
    {
        std::ostringstream os;
        os << "self-intersection of the candidate class = " << rep.c_squared;
        put(ev, "c_squared", Rat(rep.c_squared), os.str());
    }
    put(ev, "case_a_contradiction", rep.case_a_contradiction,
        "F^2 + M^2 = C^2 - 2 with F^2, M^2 >= 1 and F^2 M^2 <= 1 forces C^2 = 4");
    put(ev, "line_splits_empty", rep.line_splits.empty(),
        "l.(C - l) = 1 holds for none of the enumerated lines");
    put(ev, "residual_splits_empty", rep.residual_splits.empty(),
        "F.(C - F) = 1 holds for no residual class F = -K - l");
    put(ev, "exclusion_holds", rep.exclusion_holds,
        "no one-node splitting in any of the three cases");
    ev.diagnostics.emplace_back("lines_checked", std::to_string(rep.line_values.size()));
    ev.diagnostics.emplace_back("residuals_checked",
                                std::to_string(rep.residual_values.size()));
    return ev;
}

Evaluation eval_dual_graph_families(const json&) {
    Evaluation ev;
    const auto fixtures = genus13_pencil_graphs();
    bool all_genus_13 = true;
    bool all_stable = true;
    bool all_in_delta_irr = true;
    bool any_in_delta_i = false;
    long long stable_count = 0;
    std::string unstable;
    for (const auto& [name, graph] : fixtures) {
        if (arithmetic_genus(graph) != 13) all_genus_13 = false;
        if (is_stable(graph)) {
            ++stable_count;
        } else {
            all_stable = false;
            if (!unstable.empty()) unstable += ", ";
            unstable += name;
        }
        if (!lies_in_boundary(graph, Stratum::irr())) all_in_delta_irr = false;
        for (long long i = 1; i <= 6; ++i)
            if (lies_in_boundary(graph, Stratum::split(i))) any_in_delta_i = true;
    }
    put(ev, "instance_count", Rat(static_cast<long long>(fixtures.size())),
        "two fixed shapes plus two 9-member families over a+b = 8");
    put(ev, "all_genus_13", all_genus_13, "sum g(v) + |E| - |V| + 1 = 13 on every fixture");
    put(ev, "all_stable", all_stable,
        "2 g(v) - 2 + deg(v) + legs(v) > 0 at every vertex of every fixture");
    put(ev, "all_in_delta_irr", all_in_delta_irr,
        "every fixture smooths to the one-loop genus-12 graph");
    put(ev, "any_in_delta_i_1_6", any_in_delta_i,
        "membership of the two-vertex one-edge graph of type (i, 13-i), i = 1..6, in each "
        "smoothing closure");
    ev.diagnostics.emplace_back("stable_count", std::to_string(stable_count));
    if (!unstable.empty()) ev.diagnostics.emplace_back("unstable_instances", unstable);
    return ev;
}

Evaluation evaluate_scenario(const std::string& kind, const json& params) {
    if (kind == "pencil_certificate") return eval_pencil_certificate(params);
    if (kind == "pencil_glue") return eval_pencil_glue(params);
    if (kind == "pencil_class") return eval_pencil_class(params);
    if (kind == "quadric_pencils") return eval_quadric_pencils(params);
    if (kind == "lattice_lines") return eval_lattice_lines(params);
    if (kind == "lattice_exclusion") return eval_lattice_exclusion(params);
    if (kind == "dual_graph_families") return eval_dual_graph_families(params);
    throw MalformedScenarioError("unknown scenario kind: " + kind);
}

json pencil_params(long long chi_O, long long K2, const char* label, long long C2, long long CK,
                   long long n_marked) {
    return json{{"surface", json{{"chi_O", chi_O}, {"K2", K2}, {"label", label}}},
                {"C2", C2},
                {"CK", CK},
                {"n_marked", n_marked},
                {"star_star", true}};
}

} // namespace

std::string value_to_string(const Value& v) {
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    return rat_to_string(std::get<Rat>(v));
}

nlohmann::json value_to_json(const Value& v) {
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v);
    return rat_to_string(std::get<Rat>(v));
}

Value value_from_json(const nlohmann::json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw MalformedScenarioError("expected value must be a boolean or a rational string");
}

std::vector<Scenario> builtin_registry() {
    std::vector<Scenario> reg;

    {
        Scenario s;
        s.id = "g12_7";
        s.kind = "pencil_glue";
        s.params = json{
            {"pencil", pencil_params(2, 0, "polarized K3 surface of genus 11", 20, 0, 9)},
            {"target", json{{"g", 12}, {"n", 7}}}};
        s.provenance = "pencil of genus-11 curves through 9 general points on a polarized K3 "
                       "surface, glued into 7-pointed genus-12 curves";
        s.expected.push_back({"lambda", Rat(12), "Hodge pairing of the K3 pencil"});
        for (int i = 1; i <= 9; ++i) {
            std::ostringstream key;
            key << "psi_" << i;
            s.expected.push_back({key.str(), Rat(1), "psi pairings of the K3 pencil"});
        }
        s.expected.push_back(
            {"delta_irr", Rat(84), "irreducible-boundary pairing of the K3 pencil"});
        s.expected.push_back(
            {"w", Rat(82), "pairing with the pulled-back irreducible boundary"});
        s.expected.push_back({"v", Rat(-1), "pairing with the pulled-back canonical class"});
        s.expected.push_back({"verdict_is_uniruled", true,
                              "uniruledness of the moduli of 7-pointed genus-12 curves"});
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "g12_8";
        s.kind = "pencil_glue";
        s.params = json{
            {"pencil", pencil_params(2, 0, "polarized K3 surface of genus 11", 20, 0, 10)},
            {"target", json{{"g", 12}, {"n", 8}}}};
        s.provenance = "pencil of genus-11 curves through 10 general points on a polarized K3 "
                       "surface, glued into 8-pointed genus-12 curves";
        s.expected.push_back(
            {"w", Rat(82), "pairing with the pulled-back irreducible boundary"});
        s.expected.push_back({"v", Rat(0), "pairing with the pulled-back canonical class"});
        s.expected.push_back({"verdict_is_kodaira_bound", true,
                              "Kodaira bound for the moduli of 8-pointed genus-12 curves"});
        s.expected.push_back({"kodaira_bound", Rat(39),
                              "two below the dimension of the moduli of 8-pointed genus-12 "
                              "curves"});
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "g13_4";
        s.kind = "pencil_certificate";
        s.params =
            json{{"pencil", pencil_params(5, 5, "canonical quintic surface", 11, 13, 3)},
                 {"aux", json::array({json{{"DC", 13}, {"DK", 5}}})}};
        s.provenance = "pencil of genus-13 space curves on a canonical quintic surface, lifted "
                       "by a plane-section auxiliary curve";
        s.expected.push_back({"genus", Rat(13), "genus of the quintic-surface pencil members"});
        s.expected.push_back({"lambda", Rat(17), "Hodge pairing of the quintic-surface pencil"});
        s.expected.push_back(
            {"delta", Rat(114), "total boundary pairing of the quintic-surface pencil"});
        s.expected.push_back({"K_pairing", Rat(-4),
                              "canonical pairing on the moduli of 3-pointed genus-13 curves"});
        s.expected.push_back({"theta_K", Rat(-21),
                              "canonical pairing of the one-point lift on 4-pointed genus-13 "
                              "curves"});
        s.expected.push_back({"verdict_is_uniruled", true,
                              "uniruledness of the moduli of 4-pointed genus-13 curves"});
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "g14_3";
        s.kind = "pencil_certificate";
        s.params = json{{"pencil", pencil_params(8, 16, "(2,2,2,2) complete intersection "
                                                        "surface",
                                                 8, 18, 1)},
                        {"aux", json::array({json{{"DC", 18}, {"DK", 16}},
                                             json{{"DC", 18}, {"DK", 16}}})},
                        {"pairwise", json::array({json::array({0, 16}),
                                                  json::array({16, 0})})}};
        s.provenance = "pencil of genus-14 curves on a (2,2,2,2) complete intersection "
                       "surface, lifted by two canonical auxiliary curves";
        s.expected.push_back({"genus", Rat(14), "genus of the pencil members"});
        s.expected.push_back({"lambda", Rat(21), "Hodge pairing of the genus-14 pencil"});
        s.expected.push_back({"psi_1", Rat(1), "psi pairing of the genus-14 pencil"});
        s.expected.push_back(
            {"delta", Rat(140), "total boundary pairing of the genus-14 pencil"});
        s.expected.push_back({"K_pairing", Rat(-6),
                              "canonical pairing on the moduli of 1-pointed genus-14 curves"});
        s.expected.push_back({"theta_K", Rat(-88),
                              "canonical pairing of the two-point lift on 3-pointed genus-14 "
                              "curves"});
        s.expected.push_back({"verdict_is_uniruled", true,
                              "uniruledness of the moduli of 3-pointed genus-14 curves"});
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "g15_gamma";
        s.kind = "pencil_class";
        s.params = json{{"pencil", pencil_params(8, 16, "(2,2,2,2) complete intersection "
                                                        "surface",
                                                 9, 19, 2)}};
        s.provenance = "pencil of genus-15 curves through two points on a (2,2,2,2) complete "
                       "intersection surface";
        s.expected.push_back({"genus", Rat(15), "genus of the pencil members"});
        s.expected.push_back({"lambda", Rat(22), "Hodge pairing of the genus-15 pencil"});
        s.expected.push_back(
            {"delta", Rat(145), "total boundary pairing of the genus-15 pencil"});
        s.expected.push_back({"psi_1", Rat(1), "psi pairing of the genus-15 pencil"});
        s.expected.push_back({"psi_2", Rat(1), "psi pairing of the genus-15 pencil"});
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "g16";
        s.kind = "pencil_glue";
        s.params = json{{"pencil", pencil_params(8, 16, "(2,2,2,2) complete intersection "
                                                        "surface",
                                                 9, 19, 2)},
                        {"target", json{{"g", 16}, {"n", 0}}}};
        s.provenance = "genus-15 pencil pushed into genus 16 along the node-gluing map";
        s.expected.push_back(
            {"w", Rat(143), "pairing with the pulled-back irreducible boundary"});
        s.expected.push_back({"v", Rat(0), "pairing with the pulled-back canonical class"});
        s.expected.push_back({"verdict_is_kodaira_bound", true,
                              "Kodaira bound for the moduli of genus-16 curves"});
        s.expected.push_back(
            {"kodaira_bound", Rat(43),
             "two below the dimension of the moduli of genus-16 curves"});
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "hyperelliptic_adjunction";
        s.kind = "quadric_pencils";
        s.params = json{{"g_min", 2}, {"g_max", 10}};
        s.provenance = "bidegree (2, g+1) curves on a smooth quadric, the hyperelliptic "
                       "covering construction";
        for (long long g = 2; g <= 10; ++g) {
            std::ostringstream genus_key, points_key, cite;
            genus_key << "genus_g" << g;
            points_key << "base_points_g" << g;
            cite << "bidegree (2," << g + 1 << ") curve on a smooth quadric";
            s.expected.push_back({genus_key.str(), Rat(g), cite.str()});
            s.expected.push_back({points_key.str(), Rat(4 * g + 4), cite.str()});
        }
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "cubic_lines";
        s.kind = "lattice_lines";
        s.params = json{{"r", 6}};
        s.provenance = "the 27 lines on a smooth cubic surface";
        s.expected.push_back({"count", Rat(27), "line count of a smooth cubic surface"});
        s.expected.push_back({"all_genus_zero", true, "lines are rational"});
        s.expected.push_back({"all_degree_one", true, "lines have degree one"});
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "cubic_exclusion";
        s.kind = "lattice_exclusion";
        s.params = json{{"class", json{{"lattice", "bl_6"},
                                       {"coeffs", json::array({13, -5, -5, -5, -5, -5, -5})}}}};
        s.provenance = "one-node splitting exclusion for the class 13L - 5(E_1+..+E_6) on a "
                       "cubic surface";
        s.expected.push_back(
            {"c_squared", Rat(19), "self-intersection of the genus-6 curve class"});
        s.expected.push_back({"case_a_contradiction", true,
                              "index theorem versus C^2 = 19 for two positive-genus parts"});
        s.expected.push_back(
            {"line_splits_empty", true, "no line meets the residual class once"});
        s.expected.push_back(
            {"residual_splits_empty", true,
             "no class -K - l meets its residual class once"});
        s.expected.push_back(
            {"exclusion_holds", true, "every one-node splitting of the class is excluded"});
        reg.push_back(std::move(s));
    }
    {
        Scenario s;
        s.id = "dualgraph_delta_avoidance";
        s.kind = "dual_graph_families";
        s.params = json::object();
        s.provenance = "degenerate members of the genus-13 pencil on a reducible quintic "
                       "surface";
        s.expected.push_back({"instance_count", Rat(20),
                              "two fixed shapes plus two families over a+b = 8"});
        s.expected.push_back(
            {"all_genus_13", true, "arithmetic genus of each degenerate member"});
        s.expected.push_back({"all_in_delta_irr", true,
                              "every degenerate member lies in the irreducible boundary"});
        s.expected.push_back({"any_in_delta_i_1_6", false,
                              "no degenerate member lies in a type-(i, 13-i) boundary divisor "
                              "for i = 1..6"});
        reg.push_back(std::move(s));
    }

    std::sort(reg.begin(), reg.end(),
              [](const Scenario& a, const Scenario& b) { return a.id < b.id; });
    return reg;
}

Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario s;
    s.id = j.contains("id") && j.at("id").is_string() ? j.at("id").get<std::string>() : "";
    if (s.id.empty()) throw MalformedScenarioError("scenario needs a nonempty \"id\"");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw MalformedScenarioError("scenario needs a \"kind\" string");
    s.kind = j.at("kind").get<std::string>();
    s.params = j.contains("params") ? j.at("params") : json::object();
    if (!j.contains("expected") || !j.at("expected").is_array())
        throw MalformedScenarioError("scenario needs an \"expected\" array");
    for (const json& e : j.at("expected")) {
        ExpectedItem item;
        if (!e.contains("description") || !e.at("description").is_string())
            throw MalformedScenarioError("expected item needs a \"description\"");
        item.description = e.at("description").get<std::string>();
        if (!e.contains("value")) throw MalformedScenarioError("expected item needs a \"value\"");
        item.value = value_from_json(e.at("value"));
        if (!e.contains("citation") || !e.at("citation").is_string() ||
            e.at("citation").get<std::string>().empty())
            throw MalformedScenarioError("expected item needs a nonempty \"citation\"");
        item.citation = e.at("citation").get<std::string>();
        s.expected.push_back(std::move(item));
    }
    s.provenance = j.contains("provenance") && j.at("provenance").is_string()
                       ? j.at("provenance").get<std::string>()
                       : "";
    return s;
}

nlohmann::json scenario_to_json(const Scenario& s) {
    json j;
    j["id"] = s.id;
    j["kind"] = s.kind;
    j["params"] = s.params;
    json expected = json::array();
    for (const auto& e : s.expected) {
        expected.push_back(json{{"description", e.description},
                                {"value", value_to_json(e.value)},
                                {"citation", e.citation}});
    }
    j["expected"] = expected;
    j["provenance"] = s.provenance;
    return j;
}

ScenarioReport run_scenario(const Scenario& s) {
    Evaluation ev;
    try {
        ev = evaluate_scenario(s.kind, s.params);
    } catch (const MalformedScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedScenarioError("scenario " + s.id + ": " + e.what());
    }

    ScenarioReport rep;
    rep.id = s.id;
    rep.diagnostics = ev.diagnostics;
    rep.input_echo = json{{"id", s.id}, {"kind", s.kind}, {"params", s.params}};
    for (const ExpectedItem& e : s.expected) {
        auto it = ev.values.find(e.description);
        if (it == ev.values.end())
            throw MalformedScenarioError("scenario " + s.id + " expects \"" + e.description +
                                         "\", which the evaluator does not compute");
        const Value& actual = it->second.first;
        if (actual.index() != e.value.index())
            throw MalformedScenarioError("scenario " + s.id + ", item \"" + e.description +
                                         "\": expected and computed values have different "
                                         "types");
        ReportItem item;
        item.description = e.description;
        item.expected = e.value;
        item.actual = actual;
        item.pass = actual == e.value;
        item.citation = e.citation;
        item.explanation = it->second.second;
        rep.all_pass = rep.all_pass && item.pass;
        rep.items.push_back(std::move(item));
    }
    return rep;
}

Summary run_all(const std::vector<Scenario>& registry) {
    std::vector<Scenario> sorted = registry;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Scenario& a, const Scenario& b) { return a.id < b.id; });
    Summary summary;
    for (const Scenario& s : sorted) {
        ScenarioReport rep = run_scenario(s);
        for (const ReportItem& item : rep.items) {
            if (item.pass) {
                ++summary.passed;
            } else {
                ++summary.failed;
            }
        }
        summary.all_pass = summary.all_pass && rep.all_pass;
        summary.reports.push_back(std::move(rep));
    }
    return summary;
}

Summary run_all() { return run_all(builtin_registry()); }

std::string render_table(const Summary& summary, bool explain) {
    std::ostringstream out;
    for (const ScenarioReport& rep : summary.reports) {
        out << "== " << rep.id << " (" << (rep.all_pass ? "PASS" : "FAIL") << ")\n";
        for (const ReportItem& item : rep.items) {
            out << "  " << std::left << std::setw(26) << item.description << " expected "
                << std::setw(12) << value_to_string(item.expected) << " actual "
                << std::setw(12) << value_to_string(item.actual)
                << (item.pass ? " PASS" : " FAIL") << "\n";
            if (explain) {
                out << "      = " << item.explanation << "\n";
                out << "      cite: " << item.citation << "\n";
            }
        }
        for (const auto& [key, value] : rep.diagnostics)
            out << "  note: " << key << " = " << value << "\n";
    }
    out << "scenarios: " << summary.reports.size() << "  checks passed: " << summary.passed
        << "  failed: " << summary.failed << "\n";
    out << "RESULT: " << (summary.all_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

nlohmann::json summary_to_json(const Summary& summary) {
    json scenarios = json::array();
    for (const ScenarioReport& rep : summary.reports) {
        json items = json::array();
        for (const ReportItem& item : rep.items) {
            items.push_back(json{{"description", item.description},
                                 {"expected", value_to_json(item.expected)},
                                 {"actual", value_to_json(item.actual)},
                                 {"pass", item.pass},
                                 {"citation", item.citation},
                                 {"explanation", item.explanation}});
        }
        json diagnostics = json::object();
        for (const auto& [key, value] : rep.diagnostics) diagnostics[key] = value;
        scenarios.push_back(json{{"id", rep.id},
                                 {"all_pass", rep.all_pass},
                                 {"items", items},
                                 {"diagnostics", diagnostics},
                                 {"input", rep.input_echo}});
    }
    return json{{"all_pass", summary.all_pass},
                {"passed", summary.passed},
                {"failed", summary.failed},
                {"scenarios", scenarios}};
}

} // namespace moduli::repro
