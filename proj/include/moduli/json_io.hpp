#pragma once

#include <string>

#include <json.hpp>

#include "moduli/curve_numerics.hpp"
#include "moduli/divisor_algebra.hpp"
#include "moduli/dual_graph.hpp"
#include "moduli/surface_lattice.hpp"

// JSON wire formats.  Rationals travel as strings in lowest terms ("p/q",
// integers without the "/q").  All *_from_json functions throw ParseError
// on missing fields, wrong types, or values that fail the domain
// constructors' checks.

namespace moduli {

nlohmann::json sig_to_json(const ModuliSig& sig);
ModuliSig sig_from_json(const nlohmann::json& j);

// {"sig":{...},"lambda":"p/q","psi":{"1":"p/q",...},"delta_irr":"p/q",
//  "delta":[{"i":int,"S":[int,...],"c":"p/q"},...]}
nlohmann::json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const nlohmann::json& j);

// Same shape with pairing values instead of coefficients, plus
// "delta_total":"p/q" and "assume_rest_zero":bool; "delta" holds the
// individually declared boundary values.
nlohmann::json curve_to_json(const CurveClass& c);
CurveClass curve_from_json(const nlohmann::json& j);

nlohmann::json pencil_to_json(const PencilData& p);
PencilData pencil_from_json(const nlohmann::json& j);

nlohmann::json theta_input_to_json(const ThetaInput& in);
ThetaInput theta_input_from_json(const nlohmann::json& j);

// {"kind":"Uniruled"|"KodairaBound"|"Inconclusive","K_value":"p/q",
//  "witness":"p/q"|null,"bound":int|null}
nlohmann::json verdict_to_json(const CertificateVerdict& v);

// {"lattice":"bl_r"|"quadric","coeffs":[int,...]}
nlohmann::json lattice_class_to_json(const LatticeClass& c);
LatticeClass lattice_class_from_json(const nlohmann::json& j);

nlohmann::json splitting_report_to_json(const SplittingReport& r);

// {"vertices":[{"id":int,"g":int},...],"edges":[[id,id],...],
//  "legs":{"1":id,...}}
nlohmann::json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const nlohmann::json& j);

// "irr", "i", or "i:m1,m2,..." (split genus with the markings on that side).
Stratum stratum_from_string(const std::string& s);

} // namespace moduli
