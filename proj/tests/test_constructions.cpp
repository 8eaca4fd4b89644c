#include <doctest.h>

#include "knotpairs/catalog.hpp"
#include "knotpairs/constructions.hpp"
#include "knotpairs/parse.hpp"

using namespace knotpairs;

namespace {

KnotGroupPair identity_pair(const Presentation& p, const Word& meridian) {
    return KnotGroupPair{p, p, GroupMap::identity(p), meridian, meridian};
}

KnotGroupPair trefoil_pair() {
    Presentation t = parse_presentation("<a,b|aba=bab>");
    return identity_pair(t, parse_word("a", t));
}

Verdict meridian_quotient_verdict(const Presentation& p, const Word& m) {
    return check_weight_one(p, m).verdict;
}

}  // namespace

TEST_CASE("knot sum of two trefoils") {
    Presentation t = parse_presentation("<a,b|aba=bab>");
    Word m = parse_word("a", t);
    auto [sum, meridian] = knot_sum(t, m, t, m);
    CHECK(sum.generators().size() == 4);
    CHECK(sum.relators().size() == 3);
    CHECK(meridian == m);
    CHECK(abelianization(sum).is_infinite_cyclic());
    CHECK(meridian_quotient_verdict(sum, meridian) == Verdict::Satisfied);
}

TEST_CASE("knot sum invariants are order independent") {
    const auto& cat = catalog();
    const CatalogEntry& x = catalog_entry("trefoil");
    const CatalogEntry& y = catalog_entry("torus(2,5)");
    auto [ab, mab] = knot_sum(x.presentation, x.meridian, y.presentation, y.meridian);
    auto [ba, mba] = knot_sum(y.presentation, y.meridian, x.presentation, x.meridian);
    CHECK(abelianization(ab) == abelianization(ba));
    CHECK(meridian_quotient_verdict(ab, mab) == meridian_quotient_verdict(ba, mba));
    CHECK(cat.size() >= 3);
}

TEST_CASE("spin over the circle with degree zero") {
    SpinInput in{trefoil_pair(), parse_presentation("< x | >"), {{"x", 0}}};
    SpinResult r = frame_twist_spin(in);
    // Twist relator with degree 0 kills x; simplification recovers the input.
    TietzeResult t = tietze_simplify(r.knot_group);
    CHECK(abelianization(t.presentation) == abelianization(in.pair.ambient));
    Word m = translate(t, r.knot_meridian);
    CHECK(meridian_quotient_verdict(t.presentation, m) == Verdict::Satisfied);
    // Boundary group is pi_1(S^1) x G.
    AbelianGroupInvariants b = abelianization(r.boundary_group);
    CHECK(b.free_rank == 2);
    CHECK(b.torsion.empty());
}

TEST_CASE("spin boundary abelianization splits as H1(M) + Z") {
    Presentation torus = parse_presentation("< x, y | x y x^-1 y^-1 >");
    SpinInput in{trefoil_pair(), torus, {{"x", 1}, {"y", 0}}};
    SpinResult r = frame_twist_spin(in);
    AbelianGroupInvariants b = abelianization(r.boundary_group);
    CHECK(b == direct_sum(abelianization(torus), abelianization(in.pair.boundary)));
    CHECK(b.free_rank == 3);
}

TEST_CASE("spin inclusion is abelianized-consistent") {
    SpinInput in{trefoil_pair(), parse_presentation("< x | x^2 >"), {{"x", 2}}};
    SpinResult r = frame_twist_spin(in);
    CHECK(verify_map_abelianized(r.inclusion).consistent);
    in.pair.boundary.validate_word(r.boundary_meridian);
}

TEST_CASE("missing degree assignment is rejected") {
    SpinInput in{trefoil_pair(), parse_presentation("< x, y | >"), {{"x", 1}}};
    CHECK_THROWS_AS(frame_twist_spin(in), ValidationError);
}

TEST_CASE("multi component spin identifies consecutive meridians") {
    SpinInput one{trefoil_pair(), parse_presentation("< x | >"), {{"x", 0}}};
    Presentation two = multi_component_spin({one, one});
    AbelianGroupInvariants inv = abelianization(two);
    // Two spin components with identified meridians abelianize like a knot sum
    // of the two spin groups.
    SpinResult r = frame_twist_spin(one);
    AbelianGroupInvariants single = abelianization(r.knot_group);
    CHECK(inv.free_rank == 2 * single.free_rank - 1);
    CHECK_THROWS_AS(multi_component_spin({}), ValidationError);
}

TEST_CASE("suspension leaves the knot group bit-identical") {
    KnotGroupPair pair = trefoil_pair();
    SuspensionResult r = suspension(pair);
    CHECK(r.knot_group == pair.ambient);
    // phi = id: the doubled boundary group collapses back to Gbar.
    TietzeResult t = tietze_simplify(r.boundary_group);
    CHECK(abelianization(t.presentation) == abelianization(pair.ambient));
    CHECK(verify_map_abelianized(r.inclusion).consistent);
}

TEST_CASE("suspension over a trivial boundary group doubles H1") {
    Presentation trefoil = parse_presentation("<a,b|aba=bab>");
    Presentation trivial = parse_presentation("< e | e >");
    std::map<GeneratorSymbol, Word> images{{"e", Word()}};
    KnotGroupPair pair{trivial, trefoil, GroupMap::make(trivial, trefoil, images),
                       parse_word("e", trivial), parse_word("a", trefoil)};
    SuspensionResult r = suspension(pair);
    AbelianGroupInvariants inv = abelianization(r.boundary_group);
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
}

TEST_CASE("single stratum reports by connectivity") {
    Presentation trefoil = parse_presentation("<a,b|aba=bab>");
    Word lambda = parse_word("a", trefoil);
    Presentation m = parse_presentation("< s, t | s t s^-1 t^-1 >");

    StratumReport two = single_stratum_report(trefoil, lambda, m,
                                              StratumConnectivity::TwoConnected);
    CHECK(two.kind == "isomorphism");
    REQUIRE(two.boundary_group.has_value());
    CHECK(*two.boundary_group == trefoil);
    REQUIRE(two.kervaire.has_value());
    CHECK(two.kervaire->all_satisfied());

    StratumReport simply = single_stratum_report(trefoil, lambda, m,
                                                 StratumConnectivity::SimplyConnected);
    CHECK(simply.kind == "surjection");
    CHECK_FALSE(simply.boundary_group.has_value());

    StratumReport general = single_stratum_report(trefoil, lambda, m,
                                                  StratumConnectivity::General);
    CHECK(general.kind == "exact_sequence");
    CHECK(general.constraints.size() == 3);
}

TEST_CASE("constructions commute with generator renaming") {
    Presentation t1 = parse_presentation("<a,b|aba=bab>");
    Presentation t2 = parse_presentation("<u,v|uvu=vuv>");
    auto [s1, m1] = knot_sum(t1, parse_word("a", t1), t1, parse_word("a", t1));
    auto [s2, m2] = knot_sum(t2, parse_word("u", t2), t2, parse_word("u", t2));
    CHECK(abelianization(s1) == abelianization(s2));
    CHECK(s1.generators().size() == s2.generators().size());
    CHECK(s1.relators().size() == s2.relators().size());
}
