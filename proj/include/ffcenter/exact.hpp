#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffc {

struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("zero denominator") {}
};

struct Pole : std::domain_error {
    explicit Pole(const std::string& what) : std::domain_error(what) {}
};

struct ParameterMismatch : std::invalid_argument {
    ParameterMismatch() : std::invalid_argument("rational functions in different parameters") {}
};

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long p, long q);
    Rational(const mpz_class& p, const mpz_class& q);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational parse(const std::string& s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const;
    Rational abs() const { return Rational(::abs(q_)); }

    // always "p/q", denominator included even when 1
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

    std::size_t hash() const;

private:
    mpq_class q_;
};

Rational pow(const Rational& base, int e);
Rational factorial(int n);
Rational binomial(long n, long k);

// Univariate polynomial, coefficients lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(char var) : var_(var) {}
    UniPoly(char var, std::vector<Rational> coeffs);
    static UniPoly constant(char var, const Rational& c);
    static UniPoly monomial(char var, const Rational& c, int degree);
    // x + c
    static UniPoly linear(char var, const Rational& c) { return UniPoly(var, {c, 1}); }

    char var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : Rational(); }
    Rational lead() const { return c_.empty() ? Rational() : c_.back(); }

    Rational eval(const Rational& a) const;
    UniPoly monic() const;
    UniPoly scaled(const Rational& s) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly operator-() const { return scaled(Rational(-1)); }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // quotient and remainder; divisor must be nonzero
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // monic gcd; gcd(0,0) = 0
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    std::string str() const;
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    static char join(char a, const UniPoly& pa, char b, const UniPoly& pb);

    char var_ = 'w';
    std::vector<Rational> c_;
};

class RatFun {
public:
    RatFun() : num_('w'), den_(UniPoly::constant('w', 1)) {}
    RatFun(const Rational& c, char var = 'w');
    RatFun(long c, char var = 'w') : RatFun(Rational(c), var) {}
    explicit RatFun(const UniPoly& p);
    static RatFun normalize(const UniPoly& num, const UniPoly& den);
    // the parameter itself
    static RatFun param(char var) { return RatFun(UniPoly(var, {0, 1})); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    char var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    Rational eval(const Rational& a) const;
    RatFun inverse() const;

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o) { return *this *= o.inverse(); }
    RatFun operator-() const;
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const;

private:
    RatFun(UniPoly n, UniPoly d, bool) : num_(std::move(n)), den_(std::move(d)) {}
    UniPoly num_;
    UniPoly den_;
};

}  // namespace ffc

template <>
struct std::hash<ffc::Rational> {
    std::size_t operator()(const ffc::Rational& r) const { return r.hash(); }
};
