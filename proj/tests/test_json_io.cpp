#include <doctest.h>

#include "moduli/json_io.hpp"

using namespace moduli;
using nlohmann::json;

TEST_CASE("signature json") {
    json j = sig_to_json(ModuliSig(13, 4));
    CHECK(j == json{{"g", 13}, {"n", 4}});
    CHECK(sig_from_json(j) == ModuliSig(13, 4));
    CHECK_THROWS_AS(sig_from_json(json{{"g", 13}}), ParseError);
    CHECK_THROWS_AS(sig_from_json(json{{"g", "13"}, {"n", 4}}), ParseError);
    CHECK_THROWS_AS(sig_from_json(json{{"g", 1}, {"n", 0}}), ParseError);
}

TEST_CASE("divisor classes round trip") {
    DivisorClass d = gluing_pullback_K(ModuliSig(12, 7));
    json j = divisor_to_json(d);
    CHECK(j.contains("sig"));
    CHECK(j["lambda"] == "13");
    CHECK(j["psi"]["8"] == "2");
    CHECK(j["delta_irr"] == "-2");
    CHECK(j["delta"].is_array());
    CHECK(j["delta"][0].contains("i"));
    CHECK(j["delta"][0].contains("S"));
    CHECK(j["delta"][0].contains("c"));
    CHECK(divisor_from_json(j) == d);

    CHECK(divisor_from_json(divisor_to_json(canonical_class(ModuliSig(5, 2)))) ==
          canonical_class(ModuliSig(5, 2)));

    json bad = j;
    bad.erase("delta_irr");
    CHECK_THROWS_AS(divisor_from_json(bad), ParseError);
    bad = j;
    bad["psi"]["0"] = "1"; // marking out of range, domain error surfaces as parse error
    CHECK_THROWS_AS(divisor_from_json(bad), ParseError);
    bad = j;
    bad["lambda"] = "1.5";
    CHECK_THROWS_AS(divisor_from_json(bad), ParseError);
    bad = j;
    bad["delta"] = json::object();
    CHECK_THROWS_AS(divisor_from_json(bad), ParseError);
}

TEST_CASE("curve classes round trip") {
    PencilData p{SurfaceData{5, 5, "quintic-like"}, 11, 13, 3, true};
    CurveClass c = pencil_curve_class(p);
    json j = curve_to_json(c);
    CHECK(j["lambda"] == "17");
    CHECK(j["delta_total"] == "114");
    CHECK(j["assume_rest_zero"] == true);
    CHECK(j["delta"].size() == 1);
    CHECK(curve_from_json(j) == c);

    c.assume_rest_zero = false;
    c.set_psi(2, Rat(-7, 3));
    CHECK(curve_from_json(curve_to_json(c)) == c);

    json bad = curve_to_json(c);
    bad.erase("assume_rest_zero");
    CHECK_THROWS_AS(curve_from_json(bad), ParseError);
    bad = curve_to_json(c);
    bad["delta"].push_back(json{{"i", 1}, {"S", json::array()}, {"c", "5"}});
    CHECK_THROWS_AS(curve_from_json(bad), ParseError); // conflicts with declared 0
}

TEST_CASE("pencil and theta input round trip") {
    PencilData p{SurfaceData{8, 16, "complete intersection"}, 8, 18, 1, true};
    json pj = pencil_to_json(p);
    PencilData q = pencil_from_json(pj);
    CHECK(pencil_to_json(q) == pj);

    json unlabeled = pj;
    unlabeled["surface"].erase("label");
    CHECK(pencil_from_json(unlabeled).surface.label.empty());
    CHECK_THROWS_AS(pencil_from_json(json{{"C2", 8}}), ParseError);

    ThetaInput in{p, pencil_curve_class(p),
                  {AuxCurveData{18, 16}, AuxCurveData{18, 16}},
                  {{0, 16}, {16, 0}}};
    json tj = theta_input_to_json(in);
    ThetaInput back = theta_input_from_json(tj);
    CHECK(theta_input_to_json(back) == tj);
    CHECK(back.gamma == in.gamma);
    CHECK(theta_K(back, Rat(-6)) == theta_K(in, Rat(-6)));

    json badt = tj;
    badt["pairwise"] = json{{"x"}};
    CHECK_THROWS_AS(theta_input_from_json(badt), ParseError);
}

TEST_CASE("verdict json") {
    PencilData k3{SurfaceData{2, 0, "polarized K3"}, 20, 0, 9, true};
    json u = verdict_to_json(glued_certificate(pencil_curve_class(k3), ModuliSig(12, 7)));
    CHECK(u["kind"] == "Uniruled");
    CHECK(u["K_value"] == "-1");
    CHECK(u["witness"] == "82");
    CHECK(u["bound"].is_null());

    k3.n_marked = 10;
    json b = verdict_to_json(glued_certificate(pencil_curve_class(k3), ModuliSig(12, 8)));
    CHECK(b["kind"] == "KodairaBound");
    CHECK(b["bound"] == 39);

    json d = verdict_to_json(direct_certificate(Rat(-4), true));
    CHECK(d["witness"].is_null());
    CHECK(d["K_value"] == "-4");
}

TEST_CASE("lattice classes round trip") {
    LatticeClass c(Lattice::blowup_of_plane(6), {13, -5, -5, -5, -5, -5, -5});
    json j = lattice_class_to_json(c);
    CHECK(j["lattice"] == "bl_6");
    CHECK(j["coeffs"] == json::array({13, -5, -5, -5, -5, -5, -5}));
    CHECK(lattice_class_from_json(j) == c);

    LatticeClass q(Lattice::quadric(), {2, 3});
    CHECK(lattice_class_from_json(lattice_class_to_json(q)) == q);
    CHECK(lattice_class_to_json(q)["lattice"] == "quadric");

    CHECK_THROWS_AS(lattice_class_from_json(json{{"lattice", "cubic"}, {"coeffs", {1}}}),
                    ParseError);
    CHECK_THROWS_AS(lattice_class_from_json(json{{"lattice", "bl_x"}, {"coeffs", {1}}}),
                    ParseError);
    CHECK_THROWS_AS(lattice_class_from_json(json{{"lattice", "bl_2"}, {"coeffs", {1}}}),
                    ParseError);
    CHECK_THROWS_AS(lattice_class_from_json(json{{"lattice", "bl_2"}, {"coeffs", "x"}}),
                    ParseError);
}

TEST_CASE("splitting report json") {
    LatticeClass c(Lattice::blowup_of_plane(6), {13, -5, -5, -5, -5, -5, -5});
    json j = splitting_report_to_json(check_onenode_splittings(c));
    CHECK(j["c_squared"] == 19);
    CHECK(j["degenerate_input"] == false);
    CHECK(j["case_a"]["square_pairs"].empty());
    CHECK(j["case_a"]["contradiction"] == true);
    CHECK(j["case_b"]["values"].size() == 27);
    CHECK(j["case_b"]["splits"].empty());
    CHECK(j["case_c"]["values"].size() == 27);
    CHECK(j["case_c"]["splits"].empty());
    CHECK(j["exclusion_holds"] == true);
    CHECK(j["case_b"]["values"][0]["class"].contains("coeffs"));
}

TEST_CASE("dual graphs round trip") {
    DualGraph g({{0, 2}, {1, 11}}, {{0, 1}, {1, 1}}, {{1, 0}, {2, 0}});
    json j = graph_to_json(g);
    CHECK(j["vertices"].size() == 2);
    CHECK(j["edges"] == json::array({json::array({0, 1}), json::array({1, 1})}));
    CHECK(j["legs"]["1"] == 0);
    CHECK(graph_from_json(j) == g);

    json no_legs = j;
    no_legs.erase("legs");
    CHECK(graph_from_json(no_legs).legs.empty());

    json bad = j;
    bad["edges"].push_back(json::array({0, 1, 2}));
    CHECK_THROWS_AS(graph_from_json(bad), ParseError);
    bad = j;
    bad["legs"]["2"] = 9; // unknown vertex id
    CHECK_THROWS_AS(graph_from_json(bad), ParseError);
    bad = j;
    bad["vertices"].push_back(json{{"id", 0}, {"g", 3}}); // duplicate id
    CHECK_THROWS_AS(graph_from_json(bad), ParseError);
    CHECK_THROWS_AS(graph_from_json(json::object()), ParseError);
}

TEST_CASE("stratum strings") {
    CHECK(stratum_from_string("irr").kind == Stratum::Kind::Irr);
    Stratum s3 = stratum_from_string("3");
    CHECK(s3.kind == Stratum::Kind::Split);
    CHECK(s3.i == 3);
    CHECK(s3.S.empty());
    Stratum s0 = stratum_from_string("0:1,2");
    CHECK(s0.i == 0);
    CHECK(s0.S == std::vector<int>{1, 2});
    CHECK_THROWS_AS(stratum_from_string("x"), ParseError);
    CHECK_THROWS_AS(stratum_from_string(""), ParseError);
    CHECK_THROWS_AS(stratum_from_string("3:"), ParseError);
    CHECK_THROWS_AS(stratum_from_string("3:a"), ParseError);
    CHECK_THROWS_AS(stratum_from_string("3:1,,2"), ParseError);
}
