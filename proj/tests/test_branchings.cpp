#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polyres/branchings.hpp"
#include "polyres/io.hpp"

using namespace polyres;

namespace {

LocalBranching make_local(const Polygraph& p, const RewriteStep& f, const RewriteStep& g) {
    LocalBranching b;
    b.source = step_source(p, f);
    b.steps = {std::min(f, g), std::max(f, g)};
    return b;
}

}  // namespace

TEST_CASE("classification of local branchings in As") {
    Polygraph p = builtin_as();
    Path aaa = parse_word(p, "a.a.a");
    Path aaaa = parse_word(p, "a.a.a.a");
    RewriteStep mu_a{p.empty_path("x"), "mu", p.suffix(aaa, 2)};
    RewriteStep a_mu{p.prefix(aaa, 1), "mu", p.empty_path("x")};
    SUBCASE("equal steps are aspherical") {
        CHECK(classify(p, make_local(p, mu_a, mu_a)) == BranchingClass::aspherical);
    }
    SUBCASE("disjoint redexes are peiffer") {
        RewriteStep left{p.empty_path("x"), "mu", p.suffix(aaaa, 2)};
        RewriteStep right{p.prefix(aaaa, 2), "mu", p.empty_path("x")};
        CHECK(classify(p, make_local(p, left, right)) == BranchingClass::peiffer);
    }
    SUBCASE("the As critical pair is overlapping") {
        CHECK(classify(p, make_local(p, mu_a, a_mu)) == BranchingClass::overlapping);
    }
}

TEST_CASE("As has exactly one critical branching") {
    Polygraph p = builtin_as();
    auto bs = critical_branchings(p);
    REQUIRE(bs.size() == 1);
    CHECK(format_word(bs[0]->source) == "a.a.a");
    CHECK(bs[0]->steps[0].left.empty());
    CHECK(bs[0]->steps[1].left.size() == 1);
}

TEST_CASE("no overlap for a rule over distinct letters") {
    Polygraph p;
    p.objects = {"x"};
    p.gens = {{"a", "x", "x"}, {"b", "x", "x"}, {"c", "x", "x"}};
    p.rules = {{"r", Path{"x", {"a", "b"}}, Path{"x", {"c"}}}};
    CHECK(critical_branchings(p).empty());
}

TEST_CASE("reduced_standard has one branching per composable triple") {
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
    Polygraph p = builtin_reduced_standard(t);
    auto bs = critical_branchings(p);
    CHECK(bs.size() == 8);  // triples (u,v,w) over {a,b}
}

TEST_CASE("inclusion overlaps appear only for non-reduced input") {
    Polygraph p = builtin_as();
    Rule r;
    r.name = "nu";
    r.lhs = Path{"x", {"a", "a", "a"}};
    r.rhs = Path{"x", {"a"}};
    p.rules.push_back(r);
    auto bs = critical_branchings(p);
    // the lhs of nu contains the lhs of mu: inclusion overlaps on aaa
    bool inclusion_found = false;
    for (const auto& b : bs)
        if (b->source.size() == 3 && b->steps[0].rule != b->steps[1].rule)
            inclusion_found = true;
    CHECK(inclusion_found);
    // orders >= 3 are rejected on non-reduced input
    CHECK_THROWS_AS(critical_nfold(p, 3), Error);
}

TEST_CASE("As critical n-fold branchings are unique for n = 2..6") {
    Polygraph p = builtin_as();
    for (int n = 2; n <= 6; ++n) {
        auto bs = critical_nfold(p, n);
        REQUIRE(bs.size() == 1);
        CHECK(bs[0]->source.size() == static_cast<size_t>(n + 1));
        CHECK(bs[0]->order == n);
        // recursive coherence: steps rebuilt from (parent, extension)
        if (n > 2) {
            REQUIRE(bs[0]->parent);
            auto rebuilt = extend_branching(p, bs[0]->parent, bs[0]->extension->rule,
                                            bs[0]->extension->overlap);
            CHECK(rebuilt->key() == bs[0]->key());
        }
        // the appended step is the rightmost one on the new source
        auto rho = pick_step(p, bs[0]->source, Side::rightmost);
        REQUIRE(rho.has_value());
        CHECK(*rho == bs[0]->steps.back());
    }
}

TEST_CASE("oracle: every overlapping n-fold on short words is emitted") {
    for (Polygraph p : {builtin_as(), builtin_epi(5)}) {
        for (int n = 2; n <= 4; ++n) {
            std::set<std::string> emitted;
            for (const auto& b : critical_nfold(p, n))
                emitted.insert(oracles::stripped_key(p, b->steps));
            std::set<std::string> found;
            for (const auto& w : oracles::words_upto(p, 7))
                for (const auto& k : oracles::overlapping_nfold_on(p, w, n))
                    found.insert(k);
            // completeness and soundness after whisker stripping
            CHECK(found == emitted);
        }
    }
}

TEST_CASE("epi(6) triple branchings are indexed by i<=j<=k<=l") {
    Polygraph p = builtin_epi(6);
    auto bs = critical_nfold(p, 3);
    // enumerate the index family by hand: words s^(m) s^(m-1) s^(m-2) s^(m-3)
    size_t expected = 0;
    for (int m = 3; m <= 5; ++m)
        for (int i = 0; i <= m - 3; ++i)
            for (int j = i; j <= m - 3; ++j)
                for (int k = j; k <= m - 3; ++k)
                    for (int l = k; l <= m - 3; ++l)
                        ++expected;
    CHECK(bs.size() == expected);
    CHECK(expected == 21);
}

TEST_CASE("minimality: no smaller overlapping branching with the same rules") {
    for (Polygraph p : {builtin_as(), builtin_epi(4)}) {
        for (const auto& b : critical_nfold(p, 2)) {
            LocalBranching lb{b->source, b->steps};
            CHECK(classify(p, lb) == BranchingClass::overlapping);
            // whisker-stripped form equals itself: contexts are minimal
            CHECK(b->steps.front().left.empty());
            CHECK(step_redex_end(p, b->steps.back()) == b->source.size());
        }
    }
}
