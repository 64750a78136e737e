#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "moduli/errors.hpp"
#include "moduli/rational.hpp"

// Reproduction harness: a registry of named scenarios, each a set of inputs
// plus expected values with citations, evaluated exactly and reported as
// PASS/FAIL.  Reports are deterministic byte for byte.

namespace moduli::repro {

// Expected and computed quantities are exact rationals or booleans.
using Value = std::variant<Rat, bool>;

std::string value_to_string(const Value& v);
nlohmann::json value_to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

struct ExpectedItem {
    std::string description;
    Value value;
    std::string citation;
};

// kind selects the evaluator:
//   pencil_certificate  pencil + aux curves; class, canonical pairing,
//                       k-fold lift pairing, verdict
//   pencil_glue         pencil + gluing target; class, pullback pairings,
//                       verdict
//   pencil_class        pencil only; class and canonical pairing
//   quadric_pencils     bidegree (2, g+1) classes on the quadric over a
//                       genus range
//   lattice_lines       line enumeration on a plane blow-up
//   lattice_exclusion   one-node splitting scan for a lattice class
//   dual_graph_families the built-in genus-13 degeneration fixtures
struct Scenario {
    std::string id;
    std::string kind;
    nlohmann::json params;
    std::vector<ExpectedItem> expected;
    std::string provenance;
};

struct ReportItem {
    std::string description;
    Value expected;
    Value actual;
    bool pass = false;
    std::string citation;
    std::string explanation;
};

struct ScenarioReport {
    std::string id;
    bool all_pass = true;
    std::vector<ReportItem> items;
    std::vector<std::pair<std::string, std::string>> diagnostics;
    nlohmann::json input_echo;
};

struct Summary {
    std::vector<ScenarioReport> reports;
    bool all_pass = true;
    long long passed = 0;
    long long failed = 0;
};

// The compiled-in scenarios, sorted by id.
std::vector<Scenario> builtin_registry();

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);

// Evaluates every expected item; MalformedScenarioError when the kind is
// unknown, the parameters do not parse, an expected description names
// nothing the evaluator computes, or expected/actual types disagree.
ScenarioReport run_scenario(const Scenario& s);

// Runs a registry (reports sorted by scenario id).
Summary run_all(const std::vector<Scenario>& registry);
Summary run_all();

std::string render_table(const Summary& summary, bool explain);
nlohmann::json summary_to_json(const Summary& summary);

} // namespace moduli::repro
