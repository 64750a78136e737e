#include "moduli/json_io.hpp"

#include <sstream>

namespace moduli {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        std::ostringstream msg;
        msg << "missing field \"" << name << "\"";
        throw ParseError(msg.str());
    }
    return j.at(name);
}

long long int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) {
        std::ostringstream msg;
        msg << "field \"" << name << "\" must be an integer";
        throw ParseError(msg.str());
    }
    return v.get<long long>();
}

bool bool_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_boolean()) {
        std::ostringstream msg;
        msg << "field \"" << name << "\" must be a boolean";
        throw ParseError(msg.str());
    }
    return v.get<bool>();
}

std::string string_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) {
        std::ostringstream msg;
        msg << "field \"" << name << "\" must be a string";
        throw ParseError(msg.str());
    }
    return v.get<std::string>();
}

Rat rat_field(const json& j, const char* name) {
    return rat_from_string(string_field(j, name));
}

int parse_marking(const std::string& key) {
    try {
        std::size_t used = 0;
        int mark = std::stoi(key, &used);
        if (used != key.size()) throw ParseError("marking key is not an integer");
        return mark;
    } catch (const std::exception&) {
        throw ParseError("marking key is not an integer");
    }
}

MarkSet markset_from_json(const json& v) {
    if (!v.is_array()) throw ParseError("\"S\" must be an array of markings");
    MarkSet S;
    for (const json& m : v) {
        if (!m.is_number_integer()) throw ParseError("marking must be an integer");
        S.push_back(m.get<int>());
    }
    return S;
}

} // namespace

json sig_to_json(const ModuliSig& sig) { return json{{"g", sig.g}, {"n", sig.n}}; }

ModuliSig sig_from_json(const json& j) {
    try {
        return ModuliSig(int_field(j, "g"), int_field(j, "n"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json divisor_to_json(const DivisorClass& d) {
    json j;
    j["sig"] = sig_to_json(d.sig);
    j["lambda"] = rat_to_string(d.lambda);
    json psi = json::object();
    for (const auto& [i, c] : d.psi) psi[std::to_string(i)] = rat_to_string(c);
    j["psi"] = psi;
    j["delta_irr"] = rat_to_string(d.delta_irr);
    json delta = json::array();
    for (const auto& [idx, c] : d.delta) {
        json entry;
        entry["i"] = idx.i;
        entry["S"] = idx.S;
        entry["c"] = rat_to_string(c);
        delta.push_back(entry);
    }
    j["delta"] = delta;
    return j;
}

DivisorClass divisor_from_json(const json& j) {
    try {
        DivisorClass d(sig_from_json(field(j, "sig")));
        d.lambda = rat_field(j, "lambda");
        for (const auto& [key, value] : field(j, "psi").items()) {
            if (!value.is_string()) throw ParseError("psi coefficient must be a string");
            d.add_psi(parse_marking(key), rat_from_string(value.get<std::string>()));
        }
        d.delta_irr = rat_field(j, "delta_irr");
        const json& delta = field(j, "delta");
        if (!delta.is_array()) throw ParseError("\"delta\" must be an array");
        for (const json& entry : delta)
            d.add_delta(int_field(entry, "i"), markset_from_json(field(entry, "S")),
                        rat_field(entry, "c"));
        return d;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json curve_to_json(const CurveClass& c) {
    json j;
    j["sig"] = sig_to_json(c.sig);
    j["lambda"] = rat_to_string(c.lambda);
    json psi = json::object();
    for (const auto& [i, v] : c.psi) psi[std::to_string(i)] = rat_to_string(v);
    j["psi"] = psi;
    j["delta_total"] = rat_to_string(c.delta_total);
    json delta = json::array();
    for (const auto& [idx, v] : c.delta_known) {
        json entry;
        entry["i"] = idx.i;
        entry["S"] = idx.S;
        entry["c"] = rat_to_string(v);
        delta.push_back(entry);
    }
    j["delta"] = delta;
    j["assume_rest_zero"] = c.assume_rest_zero;
    return j;
}

CurveClass curve_from_json(const json& j) {
    try {
        CurveClass c(sig_from_json(field(j, "sig")));
        c.lambda = rat_field(j, "lambda");
        for (const auto& [key, value] : field(j, "psi").items()) {
            if (!value.is_string()) throw ParseError("psi value must be a string");
            c.set_psi(parse_marking(key), rat_from_string(value.get<std::string>()));
        }
        c.delta_total = rat_field(j, "delta_total");
        const json& delta = field(j, "delta");
        if (!delta.is_array()) throw ParseError("\"delta\" must be an array");
        for (const json& entry : delta)
            c.declare_delta(int_field(entry, "i"), markset_from_json(field(entry, "S")),
                            rat_field(entry, "c"));
        c.assume_rest_zero = bool_field(j, "assume_rest_zero");
        return c;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json pencil_to_json(const PencilData& p) {
    json j;
    j["surface"] =
        json{{"chi_O", p.surface.chi_O}, {"K2", p.surface.K2}, {"label", p.surface.label}};
    j["C2"] = p.C2;
    j["CK"] = p.CK;
    j["n_marked"] = p.n_marked;
    j["star_star"] = p.star_star;
    return j;
}

PencilData pencil_from_json(const json& j) {
    PencilData p;
    const json& surf = field(j, "surface");
    p.surface.chi_O = int_field(surf, "chi_O");
    p.surface.K2 = int_field(surf, "K2");
    p.surface.label = surf.contains("label") ? string_field(surf, "label") : "";
    p.C2 = int_field(j, "C2");
    p.CK = int_field(j, "CK");
    p.n_marked = int_field(j, "n_marked");
    p.star_star = bool_field(j, "star_star");
    return p;
}

json theta_input_to_json(const ThetaInput& in) {
    json j;
    j["pencil"] = pencil_to_json(in.pencil);
    j["gamma"] = curve_to_json(in.gamma);
    json aux = json::array();
    for (const auto& a : in.aux) aux.push_back(json{{"DC", a.DC}, {"DK", a.DK}});
    j["aux"] = aux;
    j["pairwise"] = in.pairwise;
    return j;
}

ThetaInput theta_input_from_json(const json& j) {
    ThetaInput in{pencil_from_json(field(j, "pencil")), curve_from_json(field(j, "gamma")),
                  {}, {}};
    const json& aux = field(j, "aux");
    if (!aux.is_array()) throw ParseError("\"aux\" must be an array");
    for (const json& a : aux) in.aux.push_back({int_field(a, "DC"), int_field(a, "DK")});
    const json& pw = field(j, "pairwise");
    if (!pw.is_array()) throw ParseError("\"pairwise\" must be an array of arrays");
    for (const json& row : pw) {
        if (!row.is_array()) throw ParseError("\"pairwise\" must be an array of arrays");
        std::vector<long long> r;
        for (const json& v : row) {
            if (!v.is_number_integer()) throw ParseError("pairwise entries must be integers");
            r.push_back(v.get<long long>());
        }
        in.pairwise.push_back(std::move(r));
    }
    return in;
}

json verdict_to_json(const CertificateVerdict& v) {
    json j;
    j["kind"] = verdict_kind_name(v.kind);
    j["K_value"] = rat_to_string(v.k_value);
    j["witness"] = v.witness ? json(rat_to_string(*v.witness)) : json(nullptr);
    j["bound"] = v.bound ? json(*v.bound) : json(nullptr);
    return j;
}

json lattice_class_to_json(const LatticeClass& c) {
    json j;
    if (c.lattice.kind == Lattice::Kind::Quadric) {
        j["lattice"] = "quadric";
    } else {
        std::ostringstream name;
        name << "bl_" << c.lattice.exceptional;
        j["lattice"] = name.str();
    }
    j["coeffs"] = c.coeffs;
    return j;
}

LatticeClass lattice_class_from_json(const json& j) {
    const std::string name = string_field(j, "lattice");
    Lattice lat;
    if (name == "quadric") {
        lat = Lattice::quadric();
    } else if (name.rfind("bl_", 0) == 0) {
        try {
            std::size_t used = 0;
            int r = std::stoi(name.substr(3), &used);
            if (used != name.size() - 3 || r < 0) throw ParseError("bad lattice name");
            lat = Lattice::blowup_of_plane(r);
        } catch (const std::exception&) {
            throw ParseError("bad lattice name: " + name);
        }
    } else {
        throw ParseError("unknown lattice: " + name);
    }
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
    std::vector<long long> c;
    for (const json& v : coeffs) {
        if (!v.is_number_integer()) throw ParseError("coefficients must be integers");
        c.push_back(v.get<long long>());
    }
    try {
        return LatticeClass(lat, std::move(c));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json splitting_report_to_json(const SplittingReport& r) {
    json j;
    j["c_squared"] = r.c_squared;
    j["degenerate_input"] = r.degenerate_input;

    json case_a;
    json pairs = json::array();
    for (const auto& [f2, m2] : r.genus_pairs) pairs.push_back(json::array({f2, m2}));
    case_a["square_pairs"] = pairs;
    case_a["contradiction"] = r.case_a_contradiction;
    j["case_a"] = case_a;

    auto values_json = [](const std::vector<std::pair<LatticeClass, long long>>& values) {
        json out = json::array();
        for (const auto& [cls, v] : values) {
            json entry;
            entry["class"] = lattice_class_to_json(cls);
            entry["value"] = v;
            out.push_back(entry);
        }
        return out;
    };
    auto splits_json = [](const std::vector<LatticeClass>& splits) {
        json out = json::array();
        for (const auto& cls : splits) out.push_back(lattice_class_to_json(cls));
        return out;
    };

    j["case_b"] = json{{"values", values_json(r.line_values)},
                       {"splits", splits_json(r.line_splits)}};
    j["case_c"] = json{{"values", values_json(r.residual_values)},
                       {"splits", splits_json(r.residual_splits)}};
    j["exclusion_holds"] = r.exclusion_holds;
    return j;
}

json graph_to_json(const DualGraph& g) {
    json j;
    json vertices = json::array();
    for (const auto& v : g.vertices) vertices.push_back(json{{"id", v.id}, {"g", v.genus}});
    j["vertices"] = vertices;
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(json::array({e.first, e.second}));
    j["edges"] = edges;
    json legs = json::object();
    for (const auto& [mark, vid] : g.legs) legs[std::to_string(mark)] = vid;
    j["legs"] = legs;
    return j;
}

DualGraph graph_from_json(const json& j) {
    try {
        std::vector<DualGraph::Vertex> vs;
        const json& vertices = field(j, "vertices");
        if (!vertices.is_array()) throw ParseError("\"vertices\" must be an array");
        for (const json& v : vertices)
            vs.push_back({static_cast<int>(int_field(v, "id")), int_field(v, "g")});
        std::vector<std::pair<int, int>> es;
        const json& edges = field(j, "edges");
        if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
        for (const json& e : edges) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("each edge must be a pair of vertex ids");
            es.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::map<int, int> ls;
        if (j.contains("legs")) {
            const json& legs = j.at("legs");
            if (!legs.is_object()) throw ParseError("\"legs\" must be an object");
            for (const auto& [key, value] : legs.items()) {
                if (!value.is_number_integer())
                    throw ParseError("leg target must be a vertex id");
                ls[parse_marking(key)] = value.get<int>();
            }
        }
        return DualGraph(std::move(vs), std::move(es), std::move(ls));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Stratum stratum_from_string(const std::string& s) {
    if (s == "irr") return Stratum::irr();
    std::string genus_part = s;
    std::vector<int> S;
    const std::size_t colon = s.find(':');
    if (colon != std::string::npos) {
        genus_part = s.substr(0, colon);
        std::string marks = s.substr(colon + 1);
        std::istringstream in(marks);
        std::string token;
        while (std::getline(in, token, ',')) {
            if (token.empty()) throw ParseError("empty marking in stratum: " + s);
            S.push_back(parse_marking(token));
        }
        if (S.empty()) throw ParseError("stratum marking list is empty: " + s);
    }
    long long i = 0;
    try {
        std::size_t used = 0;
        i = std::stoll(genus_part, &used);
        if (used != genus_part.size()) throw ParseError("bad stratum genus");
    } catch (const std::exception&) {
        throw ParseError("bad stratum: " + s);
    }
    return Stratum::split(i, std::move(S));
}

} // namespace moduli
