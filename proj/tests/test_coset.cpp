#include <doctest.h>

#include <set>

#include "knotpairs/coset.hpp"
#include "knotpairs/parse.hpp"

using namespace knotpairs;

namespace {

// The completed table must be a well-defined permutation action satisfying
// every relator and fixing coset 0 under the subgroup generators.
void audit_table(const Presentation& p, const std::vector<Word>& subgroup,
                 const EnumerationOutcome& o) {
    REQUIRE(o.completed);
    const CosetTable& t = o.table;
    REQUIRE(t.rows.size() == static_cast<std::size_t>(o.index));
    auto act_word = [&](long c, const Word& w) {
        for (const auto& l : w.letters()) {
            c = t.act(c, static_cast<std::size_t>(p.generator_index(l.gen)), l.sign);
        }
        return c;
    };
    for (std::size_t c = 0; c < t.rows.size(); ++c) {
        for (std::size_t g = 0; g < t.num_generators; ++g) {
            long fwd = t.rows[c][2 * g];
            long bwd = t.rows[c][2 * g + 1];
            REQUIRE(fwd >= 0);
            REQUIRE(fwd < o.index);
            CHECK(t.rows[fwd][2 * g + 1] == static_cast<long>(c));
            CHECK(t.rows[bwd][2 * g] == static_cast<long>(c));
        }
        for (const auto& r : p.relators()) CHECK(act_word(static_cast<long>(c), r) == static_cast<long>(c));
    }
    for (const auto& w : subgroup) CHECK(act_word(0, w) == 0);
}

}  // namespace

TEST_CASE("S3 presentation has order 6") {
    Presentation p = parse_presentation("< a, b | a^2, b^3, a b a b >");
    EnumerationOutcome o = enumerate_cosets(p, {});
    REQUIRE(o.completed);
    CHECK(o.index == 6);
    audit_table(p, {}, o);
}

TEST_CASE("cyclic groups of order 1..50") {
    for (int n = 1; n <= 50; ++n) {
        Presentation p = parse_presentation("< a | a^" + std::to_string(n) + " >");
        EnumerationOutcome o = enumerate_cosets(p, {});
        REQUIRE(o.completed);
        CHECK(o.index == n);
        audit_table(p, {}, o);
    }
}

TEST_CASE("subgroup enumeration") {
    Presentation p = parse_presentation("< a, b | a^2, b^3, a b a b >");
    EnumerationOutcome o = enumerate_cosets(p, {parse_word("b", p)});
    REQUIRE(o.completed);
    CHECK(o.index == 2);
    audit_table(p, {parse_word("b", p)}, o);

    EnumerationOutcome alt = enumerate_cosets(p, {parse_word("a", p)});
    REQUIRE(alt.completed);
    CHECK(alt.index == 3);
}

TEST_CASE("trefoil modulo its meridian is trivial") {
    Presentation trefoil = parse_presentation("<a,b|aba=bab>");
    Presentation q = quotient_by_normal_closure(trefoil, {parse_word("a", trefoil)});
    TrivialityVerdict v = is_trivial_group(q);
    CHECK(v.trivial);
    CHECK(v.evidence.index == 1);
}

TEST_CASE("budget exhaustion is not a verdict") {
    Presentation free2 = parse_presentation("< a, b | >");
    EnumerationOutcome o = enumerate_cosets(free2, {}, 50);
    CHECK_FALSE(o.completed);
    CHECK(o.cosets_defined >= 50);
    CHECK(o.budget == 50);
    CHECK_THROWS_AS(enumerate_cosets(free2, {}, 0), ValidationError);
}

TEST_CASE("enumeration is deterministic") {
    Presentation p = parse_presentation("< a, b | a^3, b^3, a b a^-1 b^-1 >");
    EnumerationOutcome o1 = enumerate_cosets(p, {});
    EnumerationOutcome o2 = enumerate_cosets(p, {});
    REQUIRE(o1.completed);
    CHECK(o1.index == 9);
    CHECK(o1.table.rows == o2.table.rows);
    CHECK(o1.stats.definitions == o2.stats.definitions);
    CHECK(o1.stats.coincidences == o2.stats.coincidences);
}

TEST_CASE("quaternion group has order 8") {
    Presentation p = parse_presentation("< a, b | a^4, a^2 b^-2, b^-1 a b a >");
    EnumerationOutcome o = enumerate_cosets(p, {});
    REQUIRE(o.completed);
    CHECK(o.index == 8);
    audit_table(p, {}, o);
}
