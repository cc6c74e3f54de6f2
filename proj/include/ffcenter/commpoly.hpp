#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffcenter/exact.hpp"

namespace ffc {

// Commutative polynomial over Rational in integer-labelled variables.
class CommPoly {
public:
    // sorted (variable, exponent) pairs, exponents positive
    using Monomial = std::vector<std::pair<int, int>>;
    using Terms = std::map<Monomial, Rational>;

    CommPoly() = default;
    CommPoly(const Rational& c) { if (!c.is_zero()) terms_[{}] = c; }
    CommPoly(long c) : CommPoly(Rational(c)) {}
    static CommPoly var(int v, int exp = 1);
    static CommPoly term(const Monomial& mono, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_term() const;
    int total_degree() const;
    Rational coeff(const Monomial& mono) const;

    void add(const Monomial& mono, const Rational& c);
    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    CommPoly& operator*=(const Rational& c);
    CommPoly operator-() const;
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(CommPoly a, const Rational& c) { return a *= c; }
    friend CommPoly operator*(const Rational& c, CommPoly a) { return a *= c; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

    // keep monomials of total degree <= d
    CommPoly truncated(int d) const;
    CommPoly derivative(int v) const;
    Rational eval(const std::map<int, Rational>& point) const;
    // every exponent halved; throws if some exponent is odd
    CommPoly halved_exponents() const;

    static Monomial mul(const Monomial& a, const Monomial& b);
    static int degree(const Monomial& m);

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    Terms terms_;
};

// elementary and complete homogeneous symmetric polynomials in variables first..first+n-1
CommPoly elementary_symmetric(int k, int n, int first = 0);
CommPoly complete_symmetric(int k, int n, int first = 0);

}  // namespace ffc
