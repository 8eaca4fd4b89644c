#include <doctest.h>

#include "knotpairs/kervaire.hpp"
#include "knotpairs/parse.hpp"

using namespace knotpairs;

TEST_CASE("trefoil with meridian a satisfies all four conditions") {
    Presentation p = parse_presentation("<a,b|aba=bab>");
    KervaireReport r = kervaire_report(p, parse_word("a", p));
    CHECK(r.finitely_presentable.verdict == Verdict::Satisfied);
    CHECK(r.abelianization_z.verdict == Verdict::Satisfied);
    CHECK(r.h2_zero.verdict == Verdict::Satisfied);
    CHECK(r.weight_one.verdict == Verdict::Satisfied);
    CHECK(r.all_satisfied());
}

TEST_CASE("free group of rank 2 fails the abelianization condition") {
    Presentation p = parse_presentation("< a, b | >");
    ConditionStatus c = check_abelianization_Z(p);
    CHECK(c.verdict == Verdict::Violated);
    KervaireReport r = kervaire_report(p, parse_word("a", p));
    CHECK(r.abelianization_z.verdict == Verdict::Violated);
    CHECK_FALSE(r.all_satisfied());
}

TEST_CASE("Z/2 fails the abelianization condition") {
    Presentation p = parse_presentation("< a | a^2 >");
    CHECK(check_abelianization_Z(p).verdict == Verdict::Violated);
}

TEST_CASE("h2 shortcut only fires on deficiency-1 with H1 = Z") {
    CHECK(check_h2(parse_presentation("<a,b|aba=bab>")).verdict == Verdict::Satisfied);
    CHECK(check_h2(parse_presentation("< a | >")).verdict == Verdict::Satisfied);
    // Deficiency 1 but H1 = Z^2: no shortcut.
    CHECK(check_h2(parse_presentation("< a, b, c | a b a^-1 b^-1 >")).verdict ==
          Verdict::Inconclusive);
    // Deficiency 0: never decided here, even for groups with H2 = 0.
    CHECK(check_h2(parse_presentation("< a | a^2 >")).verdict == Verdict::Inconclusive);
}

TEST_CASE("weight-one verdicts") {
    Presentation trefoil = parse_presentation("<a,b|aba=bab>");
    CHECK(check_weight_one(trefoil, parse_word("a", trefoil)).verdict == Verdict::Satisfied);
    // Killing a^2 in Z leaves Z/2: certified violation.
    Presentation z = parse_presentation("< a | >");
    ConditionStatus v = check_weight_one(z, parse_word("a^2", z));
    CHECK(v.verdict == Verdict::Violated);
    // A quotient with trivial abelianization that never completes in budget:
    // perfect nontrivial quotients stay inconclusive.
    Presentation p = parse_presentation("< a, b | a^-2 b a b, b^-2 a b a >");
    Word candidate = parse_word("a b^-1", p);
    ConditionStatus s = check_weight_one(p, candidate, 200);
    CHECK(s.verdict != Verdict::Violated);
}

TEST_CASE("pair report with explicit identity map") {
    Presentation trefoil = parse_presentation("<a,b|aba=bab>");
    Word m = parse_word("a", trefoil);
    PairReport r = pair_report(trefoil, m, trefoil, m, GroupMap::identity(trefoil));
    CHECK(r.report_g.all_satisfied());
    CHECK(r.report_gbar.all_satisfied());
    CHECK(r.map_consistency.verdict == Verdict::Satisfied);
    CHECK(r.meridian_match.verdict == Verdict::Satisfied);
    CHECK_FALSE(r.map_synthesized);
    CHECK(r.all_satisfied());
}

TEST_CASE("pair report synthesizes the canonical map when none is given") {
    Presentation trefoil = parse_presentation("<a,b|aba=bab>");
    Presentation unknot = parse_presentation("< c | >");
    PairReport r = pair_report(trefoil, parse_word("a", trefoil), unknot,
                               parse_word("c", unknot), std::nullopt);
    CHECK(r.map_synthesized);
    CHECK(r.map_consistency.verdict == Verdict::Satisfied);
    CHECK(r.meridian_match.verdict == Verdict::Satisfied);
}

TEST_CASE("meridian mismatch is detected") {
    Presentation z = parse_presentation("< a | >");
    PairReport r = pair_report(z, parse_word("a", z), z, parse_word("a^3", z),
                               GroupMap::identity(z));
    CHECK(r.meridian_match.verdict == Verdict::Violated);
}

TEST_CASE("abelianized image in Z") {
    Presentation trefoil = parse_presentation("<a,b|aba=bab>");
    mpz_class ia = abelianized_image_in_z(trefoil, parse_word("a", trefoil));
    mpz_class ib = abelianized_image_in_z(trefoil, parse_word("b", trefoil));
    CHECK(abs(ia) == 1);
    CHECK(ia == ib);
    CHECK(abelianized_image_in_z(trefoil, parse_word("a b", trefoil)) == ia + ib);
    Presentation torus = parse_presentation("< a, b | a^2 b^-5 >");
    mpz_class ta = abelianized_image_in_z(torus, parse_word("a", torus));
    mpz_class tb = abelianized_image_in_z(torus, parse_word("b", torus));
    CHECK(abs(ta) == 5);
    CHECK(abs(tb) == 2);
    CHECK(2 * ta == 5 * tb);
}
