#include <doctest.h>

#include "ffcenter/brauer.hpp"

using namespace ffc;

namespace {

RatFun om() { return RatFun::param('w'); }
BrauerElement one(int m) { return BrauerElement::one(m); }
// Coxeter generators, 0-based: s_i swaps strands i and i+1
BrauerElement si(int m, int i) { return BrauerElement::s(m, i, i + 1); }
BrauerElement ei(int m, int i) { return BrauerElement::eps(m, i, i + 1); }

}  // namespace

TEST_CASE("compose counts loops") {
    Composite c = compose(BrauerDiagram::eps(2, 0, 1), BrauerDiagram::eps(2, 0, 1));
    CHECK(c.loops == 1);
    CHECK(c.diagram == BrauerDiagram::eps(2, 0, 1));

    c = compose(BrauerDiagram::s(2, 0, 1), BrauerDiagram::s(2, 0, 1));
    CHECK(c.loops == 0);
    CHECK(c.diagram == BrauerDiagram::identity(2));

    Composite a = compose(BrauerDiagram::eps(3, 0, 1), BrauerDiagram::eps(3, 1, 2));
    Composite b = compose(a.diagram, BrauerDiagram::eps(3, 0, 1));
    CHECK(a.loops + b.loops == 0);
    CHECK(b.diagram == BrauerDiagram::eps(3, 0, 1));

    CHECK_THROWS_AS(compose(BrauerDiagram::identity(2), BrauerDiagram::identity(3)), SizeMismatch);
}

TEST_CASE("diagram text encoding") {
    CHECK(BrauerDiagram::identity(2).str() == "(1 3)(2 4)");
    CHECK(BrauerDiagram::eps(2, 0, 1).str() == "(1 2)(3 4)");
    CHECK(BrauerDiagram::s(2, 0, 1).str() == "(1 4)(2 3)");
    CHECK(BrauerDiagram::eps(3, 0, 2).hooks() == 1);
    CHECK_THROWS(BrauerDiagram::from_pairs(2, {{0, 1}, {1, 2}}));
}

TEST_CASE("mul examples") {
    for (int m = 2; m <= 4; ++m)
        for (int i = 0; i + 1 < m; ++i) CHECK(si(m, i) * ei(m, i) == ei(m, i));
    CHECK(si(3, 0) * si(3, 1) * si(3, 0) == si(3, 1) * si(3, 0) * si(3, 1));
    CHECK(BrauerElement::eps(3, 0, 2) == BrauerElement::s(3, 0, 1) * ei(3, 1) * BrauerElement::s(3, 0, 1));
    CHECK(BrauerElement::s(3, 0, 2) == BrauerElement::s(3, 0, 1) * si(3, 1) * BrauerElement::s(3, 0, 1));
    CHECK_THROWS_AS(one(2) * one(3), SizeMismatch);
}

TEST_CASE("defining relations for m <= 5") {
    for (int m = 2; m <= 5; ++m) {
        CAPTURE(m);
        for (int i = 0; i + 1 < m; ++i) {
            CHECK(si(m, i) * si(m, i) == one(m));
            CHECK(ei(m, i) * ei(m, i) == ei(m, i) * om());
            CHECK(si(m, i) * ei(m, i) == ei(m, i));
            CHECK(ei(m, i) * si(m, i) == ei(m, i));
            for (int j = 0; j + 1 < m; ++j) {
                if (std::abs(i - j) <= 1) continue;
                CHECK(si(m, i) * si(m, j) == si(m, j) * si(m, i));
                CHECK(ei(m, i) * ei(m, j) == ei(m, j) * ei(m, i));
                CHECK(si(m, i) * ei(m, j) == ei(m, j) * si(m, i));
            }
            if (i + 2 < m) {
                CHECK(si(m, i) * si(m, i + 1) * si(m, i) == si(m, i + 1) * si(m, i) * si(m, i + 1));
                CHECK(ei(m, i) * ei(m, i + 1) * ei(m, i) == ei(m, i));
                CHECK(ei(m, i + 1) * ei(m, i) * ei(m, i + 1) == ei(m, i + 1));
                CHECK(si(m, i) * ei(m, i + 1) * ei(m, i) == si(m, i + 1) * ei(m, i));
                CHECK(ei(m, i + 1) * ei(m, i) * si(m, i + 1) == ei(m, i + 1) * si(m, i));
            }
        }
    }
}

TEST_CASE("symmetrizer small cases") {
    for (auto f : {SymmetrizerFormula::JM, SymmetrizerFormula::FUSION, SymmetrizerFormula::ONEFACTOR,
                   SymmetrizerFormula::EXPANSION}) {
        CAPTURE(formula_name(f));
        CHECK(symmetrizer(1, f) == one(1));
        BrauerElement s2 = (one(2) + si(2, 0)) * RatFun(Rational(1, 2)) - ei(2, 0) * om().inverse();
        CHECK(symmetrizer(2, f) == s2);
    }
}

TEST_CASE("four formulas agree and give the idempotent, m <= 5") {
    for (int m = 2; m <= 5; ++m) {
        CAPTURE(m);
        const BrauerElement& s = symmetrizer(m, SymmetrizerFormula::JM);
        CHECK(symmetrizer(m, SymmetrizerFormula::FUSION) == s);
        CHECK(symmetrizer(m, SymmetrizerFormula::ONEFACTOR) == s);
        CHECK(symmetrizer(m, SymmetrizerFormula::EXPANSION) == s);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                CHECK(BrauerElement::s(m, i, j) * s == s);
                CHECK(s * BrauerElement::s(m, i, j) == s);
                CHECK((BrauerElement::eps(m, i, j) * s).is_zero());
                CHECK((s * BrauerElement::eps(m, i, j)).is_zero());
            }
        CHECK(s * s == s);
    }
}

TEST_CASE("Jucys-Murphy factors commute pairwise") {
    for (int m = 3; m <= 5; ++m) {
        auto f = jm_factors(m);
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b) CHECK(f[a] * f[b] == f[b] * f[a]);
    }
}
