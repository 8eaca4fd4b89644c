#include <doctest.h>

#include "knotpairs/parse.hpp"

using namespace knotpairs;

TEST_CASE("basic grammar") {
    Presentation p = parse_presentation("< a, b | a b a = b a b >");
    CHECK(p.generators() == std::vector<GeneratorSymbol>{"a", "b"});
    REQUIRE(p.relators().size() == 1);
    CHECK(p.relators()[0].size() == 6);

    Presentation free2 = parse_presentation("<a,b|>");
    CHECK(free2.relators().empty());

    Presentation empty = parse_presentation("< | >");
    CHECK(empty.generators().empty());
}

TEST_CASE("identifier runs split greedily into declared names") {
    Presentation p = parse_presentation("<a,b|aba=bab>");
    REQUIRE(p.relators().size() == 1);
    CHECK(p.relators()[0] ==
          free_reduce(parse_word("a b a b^-1 a^-1 b^-1", p)));

    // Multi-character names win over single letters when declared.
    Presentation q = parse_presentation("< ab, a | ab a >");
    REQUIRE(q.relators().size() == 1);
    CHECK(q.relators()[0].letters()[0].gen == "ab");
    CHECK(q.relators()[0].letters()[1].gen == "a");
}

TEST_CASE("exponents and inverses") {
    Presentation p = parse_presentation("< a, b | a^3 b^-2 >");
    Word w = p.relators()[0];
    CHECK(w.size() == 5);
    CHECK(parse_word("a'", p) == Word::generator("a", -1));
    CHECK(parse_word("a^0", p).empty());
    CHECK(parse_word("a^-1", p) == Word::generator("a", -1));
}

TEST_CASE("serialization round-trips") {
    for (const char* text : {"< a | >", "<a,b|aba=bab>", "< a, b | a^5 b^-3, a b a^-1 b^-1 >",
                             "< x_1, x_2 | x_1 x_2 x_1^-1 >"}) {
        Presentation p = parse_presentation(text);
        Presentation again = parse_presentation(serialize_presentation(p));
        CHECK(p == again);
    }
}

TEST_CASE("serialize_word collapses runs") {
    Presentation p = parse_presentation("< a, b | >");
    CHECK(serialize_word(parse_word("a a a", p)) == "a^3");
    CHECK(serialize_word(parse_word("a^-1", p)) == "a^-1");
    CHECK(serialize_word(Word()) == "1");
}

TEST_CASE("parse errors carry position and diagnostics") {
    CHECK_THROWS_AS(parse_presentation("a,b|ab>"), ParseError);
    CHECK_THROWS_AS(parse_presentation("<a,b|ab"), ParseError);
    CHECK_THROWS_AS(parse_presentation("<a,a|>"), ParseError);
    CHECK_THROWS_AS(parse_presentation("<a|ax>"), ParseError);
    try {
        parse_presentation("<a|\nax>");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
    }
    Presentation p = parse_presentation("< a | >");
    CHECK_THROWS_AS(parse_word("b", p), ParseError);
    CHECK_THROWS_AS(parse_word("a^", p), ParseError);
}
