#include <doctest.h>

#include <random>

#include "knotpairs/alexander.hpp"

using namespace knotpairs;

TEST_CASE("laurent parsing and printing") {
    LaurentPoly p = parse_laurent("t^-1 - 1 + t");
    CHECK(p.evaluate_at_one() == 1);
    CHECK(p.to_string() == "t^-1 - 1 + t");
    CHECK(parse_laurent(p.to_string()) == p);

    CHECK(parse_laurent("3").evaluate_at_one() == 3);
    CHECK(parse_laurent("-2t^3 + t").to_string() == "t - 2t^3");
    CHECK(parse_laurent("t - t").is_zero());
    CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("t^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("t t"), std::invalid_argument);
}

TEST_CASE("ring operations") {
    LaurentPoly t = LaurentPoly::monomial(1, 1);
    LaurentPoly tinv = LaurentPoly::monomial(1, -1);
    CHECK(t * tinv == LaurentPoly::constant(1));
    LaurentPoly p = parse_laurent("t^-1 - 1 + t");
    CHECK((p - p).is_zero());
    CHECK((p * t).evaluate_at_one() == p.evaluate_at_one());
    CHECK(p + (-p) == LaurentPoly());
}

TEST_CASE("type K is decided by p(1)") {
    CHECK(is_type_K_cyclic(parse_laurent("t^-1 - 1 + t")).type_k);
    CHECK(is_type_K_cyclic(parse_laurent("2t - 1")).type_k);
    CHECK_FALSE(is_type_K_cyclic(parse_laurent("t + 1")).type_k);
    CHECK_FALSE(is_type_K_cyclic(parse_laurent("t - 1")).type_k);
    CHECK_THROWS_AS(is_type_K_cyclic(LaurentPoly()), std::invalid_argument);
}

TEST_CASE("p complex of the figure-of-knot polynomial") {
    PComplexReport r = p_complex_homology(parse_laurent("t^-1 - 1 + t"));
    REQUIRE(r.quotient_homology.groups.size() == 4);
    CHECK(r.quotient_homology.groups[0].is_infinite_cyclic());
    CHECK(r.quotient_homology.groups[1].is_infinite_cyclic());
    CHECK(r.quotient_homology.groups[2].is_trivial());
    CHECK(r.quotient_homology.groups[3].is_trivial());
    CHECK(r.milnor_consistent);
    CHECK(r.homology_circle);
    CHECK(r.cover_h2 == "Lambda/(t^-1 - 1 + t)");
}

TEST_CASE("p complex with torsion") {
    PComplexReport r = p_complex_homology(parse_laurent("t + 2"));
    CHECK(r.p_at_one == 3);
    REQUIRE(r.quotient_homology.groups[2].torsion.size() == 1);
    CHECK(r.quotient_homology.groups[2].torsion[0] == 3);
    CHECK(r.quotient_homology.groups[3].is_trivial());
    CHECK(r.milnor_consistent);
    CHECK_FALSE(r.homology_circle);
}

TEST_CASE("unit polynomials kill the cover H2") {
    PComplexReport r = p_complex_homology(parse_laurent("t^4"));
    CHECK(r.cover_h2 == "0");
    CHECK(r.homology_circle);
    CHECK(r.milnor_consistent);
}

TEST_CASE("random polynomials keep the milnor cross-check consistent") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> terms(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly p;
        int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            p = p + LaurentPoly::monomial(coeff(rng), expo(rng));
        }
        if (p.is_zero()) continue;
        PComplexReport r = p_complex_homology(p);
        CHECK(r.milnor_consistent);
        CHECK(r.homology_circle == (abs(r.p_at_one) == 1));
    }
}
