#include <doctest.h>

#include <random>

#include "ffcenter/exact.hpp"

using namespace ffc;

namespace {

UniPoly w(std::vector<Rational> c) { return UniPoly('w', std::move(c)); }

RatFun random_ratfun(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-6, 6);
    auto poly = [&](bool nonzero) {
        for (;;) {
            std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& x : c) x = Rational(coef(rng), 1 + std::abs(coef(rng)));
            UniPoly p = w(c);
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return RatFun::normalize(poly(false), poly(true));
}

}  // namespace

TEST_CASE("rational canonical form and serialization") {
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(7).str() == "7/1");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
    CHECK_THROWS_AS(Rational(0).inverse(), ZeroDenominator);
    CHECK(binomial(-3, 2) == Rational(6));
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(factorial(5) == Rational(120));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("ratfun_normalize examples") {
    RatFun a = RatFun::normalize(w({-1, 0, 1}), w({-1, 1}));
    CHECK(a == RatFun(w({1, 1})));
    CHECK(a.den().degree() == 0);

    RatFun z = RatFun::normalize(UniPoly('w'), w({5}));
    CHECK(z.is_zero());
    CHECK(z.den() == w({1}));

    RatFun h = RatFun::normalize(w({0, 2}), w({4}));
    CHECK(h.num() == w({0, Rational(1, 2)}));
    CHECK(h.den() == w({1}));

    CHECK_THROWS_AS(RatFun::normalize(w({1}), UniPoly('w')), ZeroDenominator);
}

TEST_CASE("ratfun_eval examples") {
    CHECK(RatFun::normalize(w({1, 1}), w({-1, 1})).eval(3) == Rational(2));
    CHECK(RatFun::normalize(w({-1, 0, 1}), w({-1, 1})).eval(1) == Rational(2));
    CHECK_THROWS_AS(RatFun::normalize(w({1}), w({-1, 1})).eval(1), Pole);
}

TEST_CASE("polynomial gcd is monic and divides both") {
    UniPoly f = w({-1, 1}) * w({2, 1}) * w({0, 3});
    UniPoly g = w({-1, 1}) * w({0, 3}) * w({5, 0, 1});
    UniPoly d = UniPoly::gcd(f, g);
    CHECK(d == w({0, -1, 1}));
    UniPoly q, r;
    UniPoly::divmod(f, d, q, r);
    CHECK(r.is_zero());
    UniPoly::divmod(g, d, q, r);
    CHECK(r.is_zero());
    CHECK(UniPoly::gcd(UniPoly('w'), UniPoly('w')).is_zero());
}

TEST_CASE("parameters do not mix") {
    RatFun nu = RatFun::param('n');
    RatFun om = RatFun::param('w');
    CHECK_THROWS_AS(nu + om, ParameterMismatch);
    CHECK((nu + RatFun(3)).var() == 'n');
    CHECK((RatFun(2) * nu).eval(5) == Rational(10));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20260311);
    for (int it = 0; it < 200; ++it) {
        RatFun a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RatFun());
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFun(1));
        CHECK(a.den().lead() == Rational(1));
    }
}

TEST_CASE("canonical form is unique under scaling") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int it = 0; it < 100; ++it) {
        UniPoly p = w({coef(rng), coef(rng), coef(rng)});
        UniPoly q = w({coef(rng), coef(rng), 1});
        int k = coef(rng);
        Rational s(k == 0 ? 3 : k, 7);
        CHECK(RatFun::normalize(p.scaled(s), q.scaled(s)) == RatFun::normalize(p, q));
        UniPoly e = w({coef(rng), 1});
        CHECK(RatFun::normalize(p * e, q * e) == RatFun::normalize(p, q));
    }
}
