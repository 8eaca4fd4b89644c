#include <doctest.h>

#include <numeric>

#include "knotpairs/json_io.hpp"
#include "knotpairs/parse.hpp"

using namespace knotpairs;

TEST_CASE("catalog ships the documented entries") {
    const auto& entries = catalog();
    REQUIRE(entries.size() >= 2);
    CHECK(entries[0].name == "unknot");
    CHECK(entries[1].name == "trefoil");
    int torus_count = 0;
    for (int q = 3; q <= 7; ++q) {
        for (int p = 2; p < q; ++p) {
            if (std::gcd(p, q) == 1) ++torus_count;
        }
    }
    CHECK(entries.size() == static_cast<std::size_t>(2 + torus_count));
    CHECK_THROWS_AS(catalog_entry("nonexistent"), ValidationError);
}

TEST_CASE("catalog validation records are recomputed honestly") {
    for (const auto& e : catalog()) {
        KervaireReport r = kervaire_report(e.presentation, e.meridian);
        CHECK(r.abelianization_z.verdict == Verdict::Satisfied);
        CHECK(r.weight_one.verdict == Verdict::Satisfied);
        CHECK(e.validation.abelianization == "Z");
        CHECK(e.validation.weight_one == Verdict::Satisfied);
        CHECK(abs(abelianized_image_in_z(e.presentation, e.meridian)) == 1);
    }
}

TEST_CASE("trefoil equals torus(2,3) in invariants") {
    const CatalogEntry& t23 = catalog_entry("torus(2,3)");
    const CatalogEntry& tre = catalog_entry("trefoil");
    CHECK(abelianization(t23.presentation) == abelianization(tre.presentation));
}

TEST_CASE("presentation json round-trip") {
    for (const char* text :
         {"< a | >", "<a,b|aba=bab>", "< x_1, x_2 | x_1^4 x_2^-6, x_1 x_2 >"}) {
        Presentation p = parse_presentation(text);
        CHECK(presentation_from_json(presentation_to_json(p)) == p);
    }
    CHECK_THROWS_AS(presentation_from_json(json::array()), ValidationError);
    CHECK_THROWS_AS(word_from_json(json::parse(R"([["a", 2]])")), ValidationError);
}

TEST_CASE("matrix json uses decimal strings") {
    IntMatrix m(2, 2);
    m.at(0, 0) = mpz_class("123456789123456789123456789");
    m.at(1, 1) = -7;
    json j = matrix_to_json(m);
    CHECK(j[0][0] == "123456789123456789123456789");
    CHECK(matrix_from_json(j) == m);
}

TEST_CASE("pair json round-trip") {
    Presentation t = parse_presentation("<a,b|aba=bab>");
    KnotGroupPair pair{t, t, GroupMap::identity(t), parse_word("a", t), parse_word("a", t)};
    KnotGroupPair back = pair_from_json(pair_to_json(pair));
    CHECK(back.boundary == pair.boundary);
    CHECK(back.ambient == pair.ambient);
    CHECK(back.meridian_boundary == pair.meridian_boundary);
    CHECK(back.inclusion.images == pair.inclusion.images);
}

TEST_CASE("report json carries status and evidence") {
    Presentation t = parse_presentation("<a,b|aba=bab>");
    KervaireReport r = kervaire_report(t, parse_word("a", t));
    json j = kervaire_to_json(r);
    for (const char* key : {"finitely_presentable", "abelianization_z", "h2_zero", "weight_one"}) {
        REQUIRE(j.contains(key));
        CHECK(j[key]["status"] == "satisfied");
        CHECK(j[key].contains("evidence"));
    }
    CHECK(j["all_satisfied"] == true);
}

TEST_CASE("complex json round-trip through maximal simplices") {
    json j = json::parse("[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]");
    SimplicialComplex k = complex_from_json(j);
    CHECK(k.simplex_count(2) == 4);
    SimplicialComplex again = complex_from_json(complex_to_json(k));
    CHECK(simplicial_homology(k) == simplicial_homology(again));
}

TEST_CASE("enumeration json export") {
    Presentation p = parse_presentation("< a | a^3 >");
    json j = enumeration_to_json(enumerate_cosets(p, {}));
    CHECK(j["completed"] == true);
    CHECK(j["index"] == 3);
    CHECK(j["table"]["rows"].size() == 3);
}
