#include <doctest.h>

#include <set>

#include "moduli/divisor_algebra.hpp"

using namespace moduli;

TEST_CASE("moduli signatures") {
    ModuliSig sig(13, 3);
    CHECK(sig.dim() == 39);
    CHECK(sig.basis_certified());
    CHECK(ModuliSig(2, 0).basis_certified() == false);
    CHECK(ModuliSig(16, 0).dim() == 45);
    CHECK_THROWS_AS(ModuliSig(1, 0), Error);
    CHECK_THROWS_AS(ModuliSig(3, -1), Error);
}

TEST_CASE("marking sets normalize and complement") {
    CHECK(normalized_markings({3, 1, 3, 2}, 4) == MarkSet{1, 2, 3});
    CHECK(mark_complement({1, 3}, 4) == MarkSet{2, 4});
    CHECK(mark_complement({}, 3) == MarkSet{1, 2, 3});
    CHECK_THROWS_AS(normalized_markings({0}, 3), InvalidIndexError);
    CHECK_THROWS_AS(normalized_markings({4}, 3), InvalidIndexError);
}

TEST_CASE("boundary index normalization picks the canonical representative") {
    ModuliSig sig(5, 3);
    CHECK(normalize_boundary_index(sig, 1, {2}) == BoundaryIndex{1, {2}});
    CHECK(normalize_boundary_index(sig, 4, {1, 3}) == BoundaryIndex{1, {2}});
    // Tie on i: smaller side wins, then lexicographic.
    ModuliSig even(6, 3);
    CHECK(normalize_boundary_index(even, 3, {1}) == BoundaryIndex{3, {1}});
    CHECK(normalize_boundary_index(even, 3, {1, 2}) == BoundaryIndex{3, {3}});
    ModuliSig balanced(6, 2);
    CHECK(normalize_boundary_index(balanced, 3, {2}) == BoundaryIndex{3, {1}});
}

TEST_CASE("boundary index validity bounds") {
    ModuliSig sig(3, 2);
    CHECK_FALSE(try_normalize_boundary_index(sig, 0, {1}).has_value());
    CHECK_FALSE(try_normalize_boundary_index(sig, 3, {1}).has_value());
    CHECK_FALSE(try_normalize_boundary_index(sig, 0, {}).has_value());
    CHECK(try_normalize_boundary_index(sig, 0, {1, 2}).has_value());
    CHECK(try_normalize_boundary_index(sig, 3, {}).has_value());
    CHECK(*try_normalize_boundary_index(sig, 3, {}) == BoundaryIndex{0, {1, 2}});
    CHECK_THROWS_AS(normalize_boundary_index(sig, 0, {1}), InvalidIndexError);
    CHECK_THROWS_AS(normalize_boundary_index(sig, 4, {}), InvalidIndexError);
    CHECK_THROWS_AS(normalize_boundary_index(sig, -1, {}), InvalidIndexError);
}

TEST_CASE("boundary enumeration matches a hand count") {
    // (3,1): only (1, {}) and (1, {1}).
    auto idx31 = all_boundary_indices(ModuliSig(3, 1));
    REQUIRE(idx31.size() == 2);
    CHECK(idx31[0] == BoundaryIndex{1, {}});
    CHECK(idx31[1] == BoundaryIndex{1, {1}});

    // (3,2): four (1, S) plus (0, {1,2}).
    auto idx32 = all_boundary_indices(ModuliSig(3, 2));
    CHECK(idx32.size() == 5);

    // (2,0): just (1, {}).
    auto idx20 = all_boundary_indices(ModuliSig(2, 0));
    REQUIRE(idx20.size() == 1);
    CHECK(idx20[0] == BoundaryIndex{1, {}});

    // Sorted, unique, canonical.
    for (const auto& sig : {ModuliSig(3, 2), ModuliSig(6, 4), ModuliSig(13, 3)}) {
        auto all = all_boundary_indices(sig);
        std::set<BoundaryIndex> unique(all.begin(), all.end());
        CHECK(unique.size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& idx : all)
            CHECK(normalize_boundary_index(sig, idx.i, idx.S) == idx);
    }

    CHECK_THROWS_AS(all_boundary_indices(ModuliSig(3, 17)), TooLargeError);
}

TEST_CASE("divisor classes are sparse and compare by value") {
    ModuliSig sig(3, 2);
    DivisorClass a(sig);
    a.add_psi(1, Rat(2));
    a.add_psi(1, Rat(-2));
    CHECK(a == DivisorClass::zero(sig));
    a.add_delta(2, {1}, 1); // normalizes to (1, {2})
    CHECK(a.delta_coeff(BoundaryIndex{1, {2}}) == 1);
    DivisorClass b(sig);
    b.add_delta(1, {2}, -1);
    CHECK((a + b) == DivisorClass::zero(sig));
    CHECK((Rat(0) * a) == DivisorClass::zero(sig));
    CHECK_THROWS_AS(a.add_psi(3, Rat(1)), InvalidIndexError);

    DivisorClass other(ModuliSig(4, 2));
    CHECK_THROWS_AS(a + other, SignatureMismatchError);
}

TEST_CASE("canonical class coefficients") {
    ModuliSig sig(13, 3);
    DivisorClass K = canonical_class(sig);
    CHECK(K.lambda == 13);
    CHECK(K.psi_coeff(1) == 1);
    CHECK(K.psi_coeff(3) == 1);
    CHECK(K.delta_irr == -2);
    CHECK(K.delta_coeff(normalize_boundary_index(sig, 1, {})) == -3);
    CHECK(K.delta_coeff(normalize_boundary_index(sig, 1, {1, 2})) == -2);
    CHECK(K.delta_coeff(normalize_boundary_index(sig, 6, {})) == -2);
}

TEST_CASE("curve classes declare boundary values as facts") {
    ModuliSig sig(4, 2);
    CurveClass c(sig);
    c.delta_total = 10;
    c.declare_delta(1, {}, 3);
    c.declare_delta(1, {}, 3); // same value is fine
    CHECK_THROWS_AS(c.declare_delta(1, {}, 4), Error);
    CHECK(c.delta_irr_value() == 7);
    CHECK(c.declared_delta(BoundaryIndex{1, {}}).has_value());
    CHECK_FALSE(c.declared_delta(BoundaryIndex{1, {1}}).has_value());
    CHECK_THROWS_AS(c.set_psi(3, Rat(1)), InvalidIndexError);
}

TEST_CASE("pairing respects declared values and the rest-zero switch") {
    ModuliSig sig(4, 2);
    CurveClass c(sig);
    c.lambda = 2;
    c.set_psi(1, Rat(5));
    c.delta_total = 10;
    c.declare_delta(1, {}, 3);

    DivisorClass d(sig);
    d.lambda = 7;
    d.add_psi(1, Rat(1, 2));
    d.delta_irr = 1;
    d.add_delta(1, {}, 2);
    // 7*2 + 5/2 + 1*(10-3) + 2*3 = 29.5
    CHECK(pair(c, d) == Rat(59, 2));

    DivisorClass touches_unknown(sig);
    touches_unknown.add_delta(1, {1}, 1);
    CHECK(pair(c, touches_unknown) == 0); // rest assumed zero

    c.assume_rest_zero = false;
    CHECK_THROWS_AS(pair(c, touches_unknown), UnknownBoundaryValueError);
    CHECK_THROWS_AS(c.delta_irr_value(), UnknownBoundaryValueError);
    DivisorClass lambda_only(sig);
    lambda_only.lambda = 3;
    CHECK(pair(c, lambda_only) == 6); // no boundary values needed
}

TEST_CASE("pairing against a fully declared curve without the rest-zero switch") {
    ModuliSig sig(2, 0); // single boundary index (1, {})
    CurveClass c(sig);
    c.assume_rest_zero = false;
    c.delta_total = 5;
    c.declare_delta(1, {}, 2);
    CHECK(c.delta_irr_value() == 3);
    DivisorClass d = total_boundary(sig);
    CHECK(pair(c, d) == 5);
}

TEST_CASE("forgetful correction for one extra marking") {
    ModuliSig sig(13, 3);
    DivisorClass corr = k_forgetful_correction(sig, 1);
    ModuliSig up(13, 4);
    CHECK(corr.sig == up);
    CHECK(corr.lambda == 0);
    CHECK(corr.psi_coeff(4) == 1);
    CHECK(corr.psi_coeff(1) == 0);
    for (int i = 1; i <= 3; ++i)
        CHECK(corr.delta_coeff(normalize_boundary_index(up, 0, {i, 4})) == -2);
    CHECK(corr.delta_coeff(normalize_boundary_index(up, 1, {4})) == 1);
    CHECK(corr.delta_coeff(normalize_boundary_index(up, 1, {})) == 0);
}

TEST_CASE("forgetful correction for two extra markings") {
    ModuliSig sig(14, 1);
    ModuliSig up(14, 3);
    DivisorClass two = k_forgetful_correction(sig, 2);
    CHECK(two.sig == up);
    CHECK(two.psi_coeff(2) == 1);
    CHECK(two.psi_coeff(3) == 1);
    CHECK(two.delta_coeff(normalize_boundary_index(up, 0, {2, 3})) == -2);
    CHECK(two.delta_coeff(normalize_boundary_index(up, 1, {2})) == 1);
    CHECK(two.delta_coeff(normalize_boundary_index(up, 1, {3})) == 1);
    CHECK(two.delta_coeff(normalize_boundary_index(up, 1, {2, 3})) == 1);
    CHECK(two.delta_coeff(normalize_boundary_index(up, 0, {1, 2})) == -2);

    DivisorClass alt = k_forgetful_correction(sig, 2, ForgetfulVariant::MinusOne);
    CHECK(alt.delta_coeff(normalize_boundary_index(up, 0, {1, 2})) == -1);
    CHECK(alt.delta_coeff(normalize_boundary_index(up, 0, {2, 3})) == -2);

    CHECK_THROWS_AS(k_forgetful_correction(sig, 0), Error);
    CHECK_THROWS_AS(k_forgetful_correction(sig, 17), TooLargeError);
}

TEST_CASE("gluing pullback of the irreducible boundary") {
    ModuliSig target(12, 7);
    ModuliSig src(11, 9);
    DivisorClass pb = gluing_pullback_delta_irr(target);
    CHECK(pb.sig == src);
    CHECK(pb.delta_irr == 1);
    CHECK(pb.psi_coeff(8) == -1);
    CHECK(pb.psi_coeff(9) == -1);
    CHECK(pb.psi_coeff(1) == 0);
    // delta_{0:{8}} does not exist on (11,9); i = 1..11 all do.
    CHECK(pb.delta.size() == 11);
    for (long long i = 1; i <= 11; ++i)
        CHECK(pb.delta_coeff(normalize_boundary_index(src, i, {8})) == 1);
}

TEST_CASE("gluing pullback of the canonical class") {
    ModuliSig target(16, 0);
    ModuliSig src(15, 2);
    DivisorClass pb = gluing_pullback_K(target);
    CHECK(pb.sig == src);
    CHECK(pb.lambda == 13);
    CHECK(pb.psi_coeff(1) == 2);
    CHECK(pb.psi_coeff(2) == 2);
    CHECK(pb.delta_irr == -2);
    CHECK(pb.delta_coeff(normalize_boundary_index(src, 1, {})) == -3);
    CHECK(pb.delta_coeff(normalize_boundary_index(src, 0, {1, 2})) == -3);
    CHECK(pb.delta_coeff(normalize_boundary_index(src, 2, {1})) == -2);

    CHECK(gluing_pullback(target, "K") == pb);
    CHECK(gluing_pullback(target, "delta_irr") == gluing_pullback_delta_irr(target));
    CHECK_THROWS_AS(gluing_pullback(target, "lambda"), UnsupportedError);
    CHECK_THROWS_AS(gluing_pullback_K(ModuliSig(2, 0)), Error);
}

TEST_CASE("pairing is bilinear") {
    ModuliSig sig(5, 2);
    CurveClass c(sig);
    c.lambda = Rat(3, 2);
    c.set_psi(2, Rat(-1));
    c.delta_total = 9;
    c.declare_delta(1, {1}, 4);

    DivisorClass d1(sig);
    d1.lambda = 2;
    d1.add_delta(1, {1}, 1);
    DivisorClass d2(sig);
    d2.add_psi(2, Rat(7));
    d2.delta_irr = Rat(1, 3);

    CHECK(pair(c, d1 + d2) == pair(c, d1) + pair(c, d2));
    CHECK(pair(c, Rat(5, 4) * d1) == Rat(5, 4) * pair(c, d1));
    CHECK(pair(c, d1 - d2) == pair(c, d1) - pair(c, d2));
}
