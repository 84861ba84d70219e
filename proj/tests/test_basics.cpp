#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "polyres/io.hpp"
#include "polyres/rewriting.hpp"

using namespace polyres;

namespace {

MonoidTable table_z2() {
    // {1, a} with aa = 1
    MonoidTable t;
    t.elements = {"1", "a"};
    t.identity = "1";
    t.product[{"a", "a"}] = "1";
    t.product[{"1", "1"}] = "1";
    t.product[{"1", "a"}] = "a";
    t.product[{"a", "1"}] = "a";
    return t;
}

MonoidTable table_left_trivial() {
    // {1, a, b} with xy = y for x, y in {a, b}
    MonoidTable t;
    t.elements = {"1", "a", "b"};
    t.identity = "1";
    for (std::string x : {"a", "b"})
        for (std::string y : {"a", "b"})
            t.product[{x, y}] = y;
    for (std::string x : {"1", "a", "b"}) {
        t.product[{"1", x}] = x;
        t.product[{x, "1"}] = x;
    }
    return t;
}

}  // namespace

TEST_CASE("as file parses to the 1/1/1 presentation") {
    Polygraph as = builtin_as();
    std::string text = serialize_polygraph(as);
    Polygraph back = parse_polygraph(text);
    CHECK(back.objects.size() == 1);
    CHECK(back.gens.size() == 1);
    CHECK(back.rules.size() == 1);
    CHECK(back == as);
}

TEST_CASE("zero-rule file is a valid free presentation") {
    std::string text = R"({
  "objects": ["x", "y"],
  "generators": [{"name": "f", "src": "x", "tgt": "y"}],
  "rules": []
})";
    Polygraph p = parse_polygraph(text);
    CHECK(p.rules.empty());
    CHECK(validate(p).empty());
}

TEST_CASE("identity lhs is a typing error") {
    std::string text = R"({
  "objects": ["x"],
  "generators": [{"name": "a", "src": "x", "tgt": "x"}],
  "rules": [{"name": "r", "lhs": [], "lhs_start": "x", "rhs": ["a"], "rhs_start": "x"}]
})";
    CHECK_THROWS_AS(parse_polygraph(text), Error);
    try {
        parse_polygraph(text);
    } catch (const Error& e) {
        CHECK(e.code == Errc::typing_error);
    }
}

TEST_CASE("validate reports violations instead of throwing") {
    Polygraph p = builtin_as();
    SUBCASE("clean input gives an empty report") { CHECK(validate(p).empty()); }
    SUBCASE("parallel-endpoint violation") {
        p.objects.push_back("y");
        p.gens.push_back({"b", "x", "y"});
        p.rules[0].rhs = Path{"x", {"b"}};
        auto diags = validate(p);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].message == "parallel-endpoint violation");
    }
    SUBCASE("duplicate rule name") {
        p.rules.push_back(p.rules[0]);
        auto diags = validate(p);
        REQUIRE(!diags.empty());
        CHECK(diags[0].message == "name collision");
    }
}

TEST_CASE("round-trip on every builtin is exact") {
    for (const Polygraph& p :
         {builtin_as(), builtin_epi(3), builtin_epi(6), builtin_reduced_standard(table_z2()),
          builtin_reduced_standard(table_left_trivial())}) {
        CHECK(validate(p).empty());
        CHECK(parse_polygraph(serialize_polygraph(p)) == p);
    }
}

TEST_CASE("reduced_standard of the 2-element monoid") {
    Polygraph p = builtin_reduced_standard(table_z2());
    REQUIRE(p.gens.size() == 1);
    REQUIRE(p.rules.size() == 1);
    CHECK(p.rules[0].lhs.letters == std::vector<std::string>{"a", "a"});
    CHECK(p.rules[0].rhs.letters.empty());  // target is the identity path
    CHECK(is_reduced(p));
}

TEST_CASE("reduced_standard of the trivial monoid") {
    MonoidTable t;
    t.elements = {"1"};
    t.identity = "1";
    t.product[{"1", "1"}] = "1";
    Polygraph p = builtin_reduced_standard(t);
    CHECK(p.gens.empty());
    CHECK(p.rules.empty());
}

TEST_CASE("non-associative tables are rejected") {
    MonoidTable t;
    t.elements = {"1", "a", "b"};
    t.identity = "1";
    // a broken mix: (aa)b = b but a(ab) = a
    t.product[{"a", "a"}] = "1";
    t.product[{"a", "b"}] = "a";
    t.product[{"b", "a"}] = "a";
    t.product[{"b", "b"}] = "a";
    for (std::string x : {"1", "a", "b"}) {
        t.product[{"1", x}] = x;
        t.product[{x, "1"}] = x;
    }
    CHECK_THROWS_AS(builtin_reduced_standard(t), Error);
}

TEST_CASE("epi(3) rules are exactly the typable exchange triples") {
    Polygraph p = builtin_epi(3);
    // by hand: levels n with n+2 <= 3, i.e. rules t_i_j_n with n in {0,1}
    std::vector<std::string> expect = {"t0_0_0", "t0_0_1", "t0_1_1", "t1_1_1"};
    std::vector<std::string> got;
    for (const auto& r : p.rules)
        got.push_back(r.name);
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
    CHECK(validate(p).empty());
    // generators: s_i^(n) for 0 <= i <= n <= 2
    CHECK(p.gens.size() == 6);
}

TEST_CASE("epi truncation too small to hold a rule") {
    CHECK_THROWS_AS(builtin_epi(0), Error);
    CHECK_THROWS_AS(builtin_epi(1), Error);  // needs n+2 <= m, so m >= 2
}

TEST_CASE("word syntax round-trips") {
    Polygraph p = builtin_as();
    Path w = parse_word(p, "a.a.a");
    CHECK(w.size() == 3);
    CHECK(format_word(w) == "a.a.a");
    Path e = parse_word(p, "1@x");
    CHECK(e.empty());
    CHECK(format_word(e) == "1@x");
    CHECK_THROWS_AS(parse_word(p, "b.a"), Error);
}
