#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moduli/json_io.hpp"
#include "moduli/scenarios.hpp"

namespace {

using nlohmann::json;

// An argument that may be inline JSON, @file, or a plain path.
json load_json_arg(const std::string& arg) {
    if (arg.empty()) throw moduli::ParseError("empty JSON argument");
    std::string text;
    if (arg[0] == '{' || arg[0] == '[') {
        text = arg;
    } else {
        const std::string path = arg[0] == '@' ? arg.substr(1) : arg;
        std::ifstream in(path);
        if (!in) throw moduli::ParseError("cannot read file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw moduli::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

int run_repro(const std::string& scenario_arg, bool explain, const std::string& json_out) {
    std::vector<moduli::repro::Scenario> registry;
    if (scenario_arg.empty()) {
        registry = moduli::repro::builtin_registry();
    } else {
        bool found = false;
        for (auto& s : moduli::repro::builtin_registry()) {
            if (s.id == scenario_arg) {
                registry.push_back(std::move(s));
                found = true;
                break;
            }
        }
        if (!found) {
            json doc = load_json_arg(scenario_arg);
            if (doc.is_array()) {
                for (const json& one : doc)
                    registry.push_back(moduli::repro::scenario_from_json(one));
            } else {
                registry.push_back(moduli::repro::scenario_from_json(doc));
            }
        }
    }

    const moduli::repro::Summary summary = moduli::repro::run_all(registry);
    std::cout << moduli::repro::render_table(summary, explain);
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw moduli::Error("cannot write file: " + json_out);
        out << moduli::repro::summary_to_json(summary).dump(2) << "\n";
    }
    return summary.all_pass ? 0 : 1;
}

int run_lattice_lines(long long r) {
    const auto lines = moduli::enumerate_lines(moduli::Lattice::blowup_of_plane(static_cast<int>(r)));
    json arr = json::array();
    for (const auto& l : lines) arr.push_back(moduli::lattice_class_to_json(l));
    json out;
    out["r"] = r;
    out["count"] = lines.size();
    out["lines"] = arr;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_lattice_exclude(const std::string& class_arg) {
    const moduli::LatticeClass c = moduli::lattice_class_from_json(load_json_arg(class_arg));
    const moduli::SplittingReport rep = moduli::check_onenode_splittings(c);
    std::cout << moduli::splitting_report_to_json(rep).dump(2) << "\n";
    return rep.exclusion_holds ? 0 : 1;
}

int run_graph_check(const std::string& graph_arg, const std::string& stratum_arg) {
    const moduli::DualGraph g = moduli::graph_from_json(load_json_arg(graph_arg));
    const moduli::Stratum stratum = moduli::stratum_from_string(stratum_arg);
    const bool inside = moduli::lies_in_boundary(g, stratum);
    std::cout << (inside ? "true" : "false") << "\n";
    return inside ? 0 : 1;
}

int run_intersect(const std::string& curve_arg, const std::string& divisor_arg) {
    const moduli::CurveClass c = moduli::curve_from_json(load_json_arg(curve_arg));
    const moduli::DivisorClass d = moduli::divisor_from_json(load_json_arg(divisor_arg));
    std::cout << moduli::rat_to_string(moduli::pair(c, d)) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection calculus for moduli of stable pointed curves"};
    app.require_subcommand(1);

    auto* repro = app.add_subcommand("repro", "run reproduction scenarios");
    bool repro_all = false;
    bool repro_explain = false;
    std::string repro_scenario;
    std::string repro_json;
    repro->add_flag("--all", repro_all, "run the full built-in registry (the default)");
    repro->add_option("--scenario", repro_scenario,
                      "a built-in scenario id, or a JSON scenario file");
    repro->add_flag("--explain", repro_explain, "print the formula expansion for every check");
    repro->add_option("--json", repro_json, "also write the report as JSON to this path");

    auto* lattice = app.add_subcommand("lattice", "Picard-lattice computations");
    lattice->require_subcommand(1);
    auto* lines = lattice->add_subcommand("lines", "enumerate the lines of a plane blow-up");
    long long lines_r = 0;
    lines->add_option("--r", lines_r, "number of blown-up points (0..8)")->required();
    auto* exclude =
        lattice->add_subcommand("exclude", "one-node splitting scan for a curve class");
    std::string exclude_class;
    exclude->add_option("--class", exclude_class, "lattice class as JSON (inline or @file)")
        ->required();

    auto* graph = app.add_subcommand("graph", "dual-graph computations");
    graph->require_subcommand(1);
    auto* check = graph->add_subcommand("check", "boundary-stratum membership of a dual graph");
    std::string check_graph;
    std::string check_stratum;
    check->add_option("--graph", check_graph, "dual graph as JSON (inline or @file)")->required();
    check->add_option("--stratum", check_stratum, "\"irr\", \"i\", or \"i:m1,m2,...\"")
        ->required();

    auto* intersect = app.add_subcommand("intersect", "pair a curve class with a divisor class");
    std::string intersect_curve;
    std::string intersect_divisor;
    intersect->add_option("--curve", intersect_curve, "curve class as JSON (inline or @file)")
        ->required();
    intersect
        ->add_option("--divisor", intersect_divisor, "divisor class as JSON (inline or @file)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (repro->parsed()) {
            if (repro_all && !repro_scenario.empty())
                throw moduli::Error("--all and --scenario are mutually exclusive");
            return run_repro(repro_scenario, repro_explain, repro_json);
        }
        if (lines->parsed()) return run_lattice_lines(lines_r);
        if (exclude->parsed()) return run_lattice_exclude(exclude_class);
        if (check->parsed()) return run_graph_check(check_graph, check_stratum);
        if (intersect->parsed()) return run_intersect(intersect_curve, intersect_divisor);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
