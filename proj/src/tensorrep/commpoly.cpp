#include <sstream>
#include <stdexcept>

#include "ffcenter/commpoly.hpp"

namespace ffc {

CommPoly CommPoly::var(int v, int exp) {
    CommPoly p;
    if (exp == 0) return CommPoly(1);
    p.terms_[{{v, exp}}] = Rational(1);
    return p;
}

CommPoly CommPoly::term(const Monomial& mono, const Rational& c) {
    CommPoly p;
    p.add(mono, c);
    return p;
}

Rational CommPoly::constant_term() const { return coeff({}); }

int CommPoly::degree(const Monomial& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

int CommPoly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, degree(m));
    return d;
}

Rational CommPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational() : it->second;
}

void CommPoly::add(const Monomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(mono, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

CommPoly CommPoly::operator-() const { return *this * Rational(-1); }

CommPoly::Monomial CommPoly::mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add(CommPoly::mul(ma, mb), ca * cb);
    return r;
}

CommPoly CommPoly::truncated(int d) const {
    CommPoly r;
    for (auto& [m, c] : terms_)
        if (degree(m) <= d) r.terms_.emplace(m, c);
    return r;
}

CommPoly CommPoly::derivative(int v) const {
    CommPoly r;
    for (auto& [m, c] : terms_) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k].first != v) continue;
            Monomial d = m;
            Rational f = c * Rational(d[k].second);
            if (--d[k].second == 0) d.erase(d.begin() + static_cast<long>(k));
            r.add(d, f);
        }
    }
    return r;
}

Rational CommPoly::eval(const std::map<int, Rational>& point) const {
    Rational acc;
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw std::invalid_argument("evaluation point misses a variable");
            t *= pow(it->second, e);
        }
        acc += t;
    }
    return acc;
}

CommPoly CommPoly::halved_exponents() const {
    CommPoly r;
    for (auto& [m, c] : terms_) {
        Monomial h = m;
        for (auto& [v, e] : h) {
            if (e % 2) throw std::domain_error("polynomial is not a polynomial in squares");
            e /= 2;
        }
        r.add(h, c);
    }
    return r;
}

std::string CommPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (auto& [v, e] : m) {
            os << "*";
            if (v >= 0 && v < static_cast<int>(names.size())) os << names[static_cast<std::size_t>(v)];
            else os << "x" << v;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

void symmetric(int k, int n, int first, int from, bool strict, CommPoly::Monomial& cur, CommPoly& out) {
    if (k == 0) {
        out.add(cur, 1);
        return;
    }
    for (int v = from; v < n; ++v) {
        bool bump = !cur.empty() && cur.back().first == first + v;
        if (bump) ++cur.back().second;
        else cur.emplace_back(first + v, 1);
        symmetric(k - 1, n, first, strict ? v + 1 : v, strict, cur, out);
        if (bump) --cur.back().second;
        else cur.pop_back();
    }
}

}  // namespace

CommPoly elementary_symmetric(int k, int n, int first) {
    CommPoly out;
    CommPoly::Monomial cur;
    symmetric(k, n, first, 0, true, cur, out);
    return out;
}

CommPoly complete_symmetric(int k, int n, int first) {
    CommPoly out;
    CommPoly::Monomial cur;
    symmetric(k, n, first, 0, false, cur, out);
    return out;
}

}  // namespace ffc
