#include <sstream>

#include "ffcenter/brauer.hpp"

namespace ffc {

namespace {

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    UniPoly g = UniPoly::gcd(a, b), q, r;
    UniPoly::divmod(a * b, g, q, r);
    return q.monic();
}

// x = (1 / (denom * den)) * sum num_d d with integer polynomial num_d
struct IntegerForm {
    mpz_class denom = 1;
    UniPoly den;
    std::vector<std::pair<const BrauerDiagram*, std::vector<mpz_class>>> terms;
};

IntegerForm integer_form(const BrauerElement& x) {
    IntegerForm f;
    char var = 'w';
    for (auto& [d, c] : x.terms())
        if (!c.is_constant()) var = c.var();
    f.den = UniPoly::constant(var, 1);
    for (auto& [d, c] : x.terms())
        if (!c.den().is_constant()) f.den = lcm(f.den, c.den());
    std::vector<UniPoly> scaled;
    scaled.reserve(x.size());
    for (auto& [d, c] : x.terms()) {
        UniPoly q, r;
        UniPoly::divmod(f.den, c.den(), q, r);
        scaled.push_back(c.num() * q);
        for (auto& a : scaled.back().coeffs()) mpz_lcm(f.denom.get_mpz_t(), f.denom.get_mpz_t(), a.den().get_mpz_t());
    }
    std::size_t k = 0;
    for (auto& [d, c] : x.terms()) {
        std::vector<mpz_class> v;
        for (auto& a : scaled[k].coeffs()) v.push_back(a.num() * (f.denom / a.den()));
        f.terms.emplace_back(&d, std::move(v));
        ++k;
    }
    return f;
}

}  // namespace

BrauerElement::BrauerElement(const BrauerDiagram& d, const RatFun& c) : m_(d.m) { add(d, c); }

RatFun BrauerElement::coeff(const BrauerDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? RatFun() : it->second;
}

void BrauerElement::add(const BrauerDiagram& d, const RatFun& c) {
    if (d.m != m_) throw SizeMismatch();
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(d, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BrauerElement& BrauerElement::operator+=(const BrauerElement& o) {
    if (o.m_ != m_) throw SizeMismatch();
    for (auto& [d, c] : o.terms_) add(d, c);
    return *this;
}

BrauerElement& BrauerElement::operator-=(const BrauerElement& o) {
    if (o.m_ != m_) throw SizeMismatch();
    for (auto& [d, c] : o.terms_) add(d, -c);
    return *this;
}

BrauerElement& BrauerElement::operator*=(const RatFun& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

BrauerElement operator*(const BrauerElement& x, const BrauerElement& y) {
    if (x.m_ != y.m_) throw SizeMismatch();
    BrauerElement out(x.m_);
    if (x.is_zero() || y.is_zero()) return out;
    IntegerForm fx = integer_form(x), fy = integer_form(y);
    std::map<BrauerDiagram, std::vector<mpz_class>> acc;
    for (auto& [dx, px] : fx.terms) {
        for (auto& [dy, py] : fy.terms) {
            Composite c = compose(*dx, *dy);
            auto& v = acc[c.diagram];
            std::size_t need = px.size() + py.size() - 1 + static_cast<std::size_t>(c.loops);
            if (v.size() < need) v.resize(need);
            for (std::size_t i = 0; i < px.size(); ++i) {
                if (px[i] == 0) continue;
                for (std::size_t j = 0; j < py.size(); ++j)
                    mpz_addmul(v[i + j + c.loops].get_mpz_t(), px[i].get_mpz_t(), py[j].get_mpz_t());
            }
        }
    }
    mpz_class denom = fx.denom * fy.denom;
    UniPoly den = fx.den * fy.den;
    char var = den.is_constant() ? fx.den.var() : den.var();
    if (fx.den.is_constant() && !fy.den.is_constant()) var = fy.den.var();
    for (auto& [d, v] : acc) {
        std::vector<Rational> coeffs;
        coeffs.reserve(v.size());
        for (auto& a : v) coeffs.emplace_back(a, denom);
        UniPoly num(var, std::move(coeffs));
        if (num.is_zero()) continue;
        out.terms_.emplace(d, RatFun::normalize(num, UniPoly(var, den.coeffs())));
    }
    return out;
}

BrauerElement mul(const BrauerElement& x, const BrauerElement& y) { return x * y; }

std::string BrauerElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : terms_) {
        if (!first) os << " + ";
        os << "[" << c.str() << "]" << d.str();
        first = false;
    }
    return os.str();
}

}  // namespace ffc
