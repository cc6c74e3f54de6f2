#include "ffcenter/exact.hpp"

#include <sstream>

namespace ffc {

UniPoly::UniPoly(char var, std::vector<Rational> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(char var, const Rational& c) {
    return c.is_zero() ? UniPoly(var) : UniPoly(var, {c});
}

UniPoly UniPoly::monomial(char var, const Rational& c, int degree) {
    if (c.is_zero()) return UniPoly(var);
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(var, std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

char UniPoly::join(char a, const UniPoly& pa, char b, const UniPoly& pb) {
    if (a == b) return a;
    if (pa.is_constant()) return b;
    if (pb.is_constant()) return a;
    throw ParameterMismatch();
}

Rational UniPoly::eval(const Rational& a) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(c_.back().inverse());
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return UniPoly(var_);
    UniPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    var_ = join(var_, *this, o.var_, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    var_ = join(var_, *this, o.var_, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    char v = UniPoly::join(a.var_, a, b.var_, b);
    if (a.is_zero() || b.is_zero()) return UniPoly(v);
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(v, std::move(r));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw ZeroDenominator();
    char v = join(a.var_, a, b.var_, b);
    r = a;
    r.var_ = v;
    q = UniPoly(v);
    if (a.degree() < b.degree()) return;
    std::vector<Rational> qc(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    Rational inv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.lead() * inv;
        qc[static_cast<std::size_t>(shift)] = f;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[j + static_cast<std::size_t>(shift)] -= f * b.c_[j];
        r.c_.pop_back();
        r.trim();
    }
    q = UniPoly(v, std::move(qc));
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    x.var_ = y.var_ = join(a.var_, a, b.var_, b);
    while (!y.is_zero()) {
        UniPoly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = c_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.abs();
        if (d == 0 || !a.is_one()) os << a << (d ? "*" : "");
        if (d) os << var_;
        if (d > 1) os << "^" << d;
        first = false;
    }
    return os.str();
}

std::vector<std::string> UniPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (auto& c : c_) out.push_back(c.str());
    return out;
}

RatFun::RatFun(const Rational& c, char var) : num_(UniPoly::constant(var, c)), den_(UniPoly::constant(var, 1)) {}

RatFun::RatFun(const UniPoly& p) : num_(p), den_(UniPoly::constant(p.var(), 1)) {}

RatFun RatFun::normalize(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw ZeroDenominator();
    UniPoly n = num, d = den;
    char v = (n * d).var();
    if (n.is_zero()) return RatFun(Rational(), v);
    UniPoly g = UniPoly::gcd(n, d);
    if (g.degree() > 0) {
        UniPoly q, r;
        UniPoly::divmod(n, g, q, r);
        n = q;
        UniPoly::divmod(d, g, q, r);
        d = q;
    }
    Rational lc = d.lead();
    n = n.scaled(lc.inverse());
    d = d.monic();
    n = UniPoly(v, n.coeffs());
    d = UniPoly(v, d.coeffs());
    return RatFun(std::move(n), std::move(d), true);
}

Rational RatFun::constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant");
    return num_.coeff(0);
}

Rational RatFun::eval(const Rational& a) const {
    Rational d = den_.eval(a);
    if (d.is_zero()) throw Pole("pole at " + a.str() + " of " + str());
    return num_.eval(a) / d;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw ZeroDenominator();
    return normalize(den_, num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, true); }

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        if (den_.is_constant()) {
            num_ += o.num_;
            den_ = UniPoly::constant(num_.var(), 1);
            num_ = UniPoly(den_.var(), num_.coeffs());
            return *this;
        }
        *this = normalize(num_ + o.num_, den_);
        return *this;
    }
    *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun(Rational(), var());
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        den_ = UniPoly::constant(num_.var(), 1);
        return *this;
    }
    *this = normalize(num_ * o.num_, den_ * o.den_);
    return *this;
}

std::string RatFun::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace ffc
