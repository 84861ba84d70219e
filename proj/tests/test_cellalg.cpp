#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyres/homology.hpp"
#include "polyres/io.hpp"
#include "polyres/resolution.hpp"

using namespace polyres;

namespace {

struct AsFixture {
    Polygraph p = builtin_as();
    Resolution R{p, 3};
    Sig& sig = R.sig();
    Path empty{"x", {}};
    Path a{p.letter_path("a")};
};

}  // namespace

TEST_CASE("building the As confluence 2-cell") {
    AsFixture f;
    Cell mu = f.sig.gen("mu");
    Cell left = f.sig.whisk(f.empty, mu, f.a);
    Cell cell = f.sig.comp(1, left, mu);
    CHECK(cell->dim == 2);
    CHECK(format_word(f.sig.word_boundary(cell, BSide::source)) == "a.a.a");
    CHECK(format_word(f.sig.word_boundary(cell, BSide::target)) == "a");
}

TEST_CASE("identity 2-cell on a word") {
    AsFixture f;
    Cell id = f.sig.id1(f.a);
    CHECK(id->dim == 2);
    CHECK(f.sig.word_boundary(id, BSide::source) == f.a);
    CHECK(f.sig.word_boundary(id, BSide::target) == f.a);
    CHECK(f.sig.content_dim(id) == 1);
}

TEST_CASE("mismatched 1-composition is rejected") {
    AsFixture f;
    Cell mu = f.sig.gen("mu");
    CHECK_THROWS_AS(f.sig.comp(1, mu, mu), Error);
    try {
        f.sig.comp(1, mu, mu);
    } catch (const Error& e) {
        CHECK(e.code == Errc::boundary_mismatch);
    }
    // composition level must stay below the dimension
    try {
        f.sig.comp(3, mu, mu);
    } catch (const Error& e) {
        CHECK(e.code == Errc::dim_mismatch);
    }
}

TEST_CASE("inverses only above dimension 1 and involutive") {
    AsFixture f;
    Cell mu = f.sig.gen("mu");
    Cell i = f.sig.inv(mu);
    CHECK(f.sig.inv(i) == mu);
    CHECK(f.sig.word_boundary(i, BSide::source) == f.sig.word_boundary(mu, BSide::target));
    // inverse of an identity is itself
    CHECK(f.sig.inv(f.sig.id1(f.a)) == f.sig.id1(f.a));
}

TEST_CASE("boundaries of the generating confluence 3-cell") {
    AsFixture f;
    Cell alpha = f.sig.gen("w3_0");
    REQUIRE(alpha->dim == 3);
    Cell s2 = f.sig.boundary(alpha, 2, BSide::source);
    Cell t2 = f.sig.boundary(alpha, 2, BSide::target);
    // source is (mu.a) *1 mu, target is (a.mu) *1 mu
    Cell mu = f.sig.gen("mu");
    CHECK(s2 == f.sig.comp(1, f.sig.whisk(f.empty, mu, f.a), mu));
    CHECK(t2 == f.sig.comp(1, f.sig.whisk(f.a, mu, f.empty), mu));
    // 0-boundaries are the unique object
    CHECK(f.sig.word_boundary(alpha, BSide::source).start == "x");
    CHECK(f.p.path_end(f.sig.word_boundary(alpha, BSide::source)) == "x");
}

TEST_CASE("globularity after normalisation") {
    AsFixture f;
    Cell alpha = f.sig.gen("w3_0");
    for (BSide outer : {BSide::source, BSide::target}) {
        Cell b = f.sig.boundary(alpha, 2, outer);
        CHECK(f.sig.word_boundary(b, BSide::source) ==
              f.sig.word_boundary(alpha, BSide::source));
        CHECK(f.sig.word_boundary(b, BSide::target) ==
              f.sig.word_boundary(alpha, BSide::target));
    }
}

TEST_CASE("globularity of boundary expressions on a 4-cell") {
    Polygraph p = builtin_as();
    Resolution R(p, 4);
    Sig& sig = R.sig();
    Cell aleph = sig.gen(R.cells(4)[0].name);
    for (BSide inner : {BSide::source, BSide::target}) {
        Cell via_s = sig.boundary(sig.boundary(aleph, 3, BSide::source), 2, inner);
        Cell via_t = sig.boundary(sig.boundary(aleph, 3, BSide::target), 2, inner);
        CHECK(via_s == via_t);  // interned canonical forms coincide
    }
}

TEST_CASE("sequentialize0 is left-first and idempotent") {
    AsFixture f;
    Cell mu = f.sig.gen("mu");
    Cell e = f.sig.comp(0, mu, mu);
    REQUIRE(e->tag == CellTag::comp);
    Cell s = f.sig.sequentialize0(e);
    Path aa = f.p.concat(f.a, f.a);
    Cell expect = f.sig.comp(1, f.sig.whisk(f.empty, mu, aa), f.sig.whisk(f.a, mu, f.empty));
    CHECK(s == expect);
    CHECK(f.sig.sequentialize0(s) == s);
    // already-whiskered expressions are unchanged
    Cell w = f.sig.whisk(f.empty, mu, f.a);
    CHECK(f.sig.sequentialize0(w) == w);
}

TEST_CASE("abelianisation is invariant under sequentialize0") {
    AsFixture f;
    std::mt19937 rng(20240817);
    Cell mu = f.sig.gen("mu");
    auto rand_word = [&](size_t max_len) {
        Path w = f.empty;
        size_t n = rng() % (max_len + 1);
        for (size_t i = 0; i < n; ++i)
            w.letters.push_back("a");
        return w;
    };
    // random well-typed 2-cells: whiskered rule cells and their 0/1-composites
    auto rand_atom = [&]() -> Cell {
        Cell c = f.sig.whisk(rand_word(2), mu, rand_word(2));
        if (rng() % 3 == 0)
            c = f.sig.inv(c);
        return c;
    };
    for (int round = 0; round < 50; ++round) {
        Cell x = rand_atom();
        Cell y = rand_atom();
        Cell e = f.sig.comp(0, x, y);
        if (rng() % 2) {
            // extend with a 1-composite where possible
            Path t = f.sig.word_boundary(e, BSide::target);
            e = f.sig.comp(1, e, f.sig.id1(t));
        }
        Cell s = f.sig.sequentialize0(e);
        CHECK(f.sig.bracket(e) == f.sig.bracket(s));
        CHECK(f.sig.word_boundary(e, BSide::source) == f.sig.word_boundary(s, BSide::source));
        CHECK(f.sig.word_boundary(e, BSide::target) == f.sig.word_boundary(s, BSide::target));
    }
}

TEST_CASE("composition chains are reassociated canonically") {
    AsFixture f;
    Cell mu = f.sig.gen("mu");
    Cell s1 = f.sig.whisk(f.p.concat(f.a, f.a), mu, f.empty);
    Cell s2 = f.sig.whisk(f.a, mu, f.empty);
    Cell s3 = mu;
    Cell left = f.sig.comp(1, f.sig.comp(1, s1, s2), s3);
    Cell right = f.sig.comp(1, s1, f.sig.comp(1, s2, s3));
    CHECK(left == right);
    CHECK(f.sig.bracket(left) == f.sig.bracket(right));
}

TEST_CASE("renderings are stable") {
    AsFixture f;
    Cell mu = f.sig.gen("mu");
    Cell cell = f.sig.comp(1, f.sig.whisk(f.empty, mu, f.a), mu);
    CHECK(f.sig.render(cell) == "(mu·a ⋆1 mu)");
    CHECK(f.sig.render(f.sig.inv(mu)) == "mu^-");
    CHECK(f.sig.render(f.sig.id1(f.a)) == "id(a)");
    CHECK(f.sig.render(f.sig.whisk(f.a, mu, f.empty)) == "a·mu");
}

TEST_CASE("whisker contexts must compose") {
    Polygraph p;
    p.objects = {"x", "y"};
    p.gens = {{"f", "x", "y"}, {"g", "y", "y"}};
    p.rules = {{"r", Path{"y", {"g", "g"}}, Path{"y", {"g"}}}};
    Rewriter rw(p);
    Sig sig(rw);
    Cell r = sig.gen("r");
    CHECK_NOTHROW(sig.whisk(p.letter_path("f"), r, p.empty_path("y")));
    CHECK_THROWS_AS(sig.whisk(p.letter_path("g"), r, p.letter_path("f")), Error);
}
