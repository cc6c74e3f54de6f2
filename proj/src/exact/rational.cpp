#include "ffcenter/exact.hpp"

#include <functional>

namespace ffc {

Rational::Rational(long p, long q) {
    if (q == 0) throw ZeroDenominator();
    q_ = mpq_class(p, q);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& p, const mpz_class& q) {
    if (q == 0) throw ZeroDenominator();
    q_ = mpq_class(p, q);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDenominator();
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator();
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash() const {
    std::size_t h = 0;
    auto mix = [&h](const mpz_class& z) {
        std::size_t n = mpz_size(z.get_mpz_t());
        const mp_limb_t* d = mpz_limbs_read(z.get_mpz_t());
        h ^= std::hash<long>()(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        for (std::size_t i = 0; i < n; ++i)
            h ^= std::hash<mp_limb_t>()(d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(q_.get_num());
    mix(q_.get_den());
    return h;
}

Rational pow(const Rational& base, int e) {
    if (e < 0) return pow(base.inverse(), -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Rational(f, mpz_class(1));
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational();
    mpz_class b;
    if (n >= 0) {
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        mpz_class nn(static_cast<signed long>(n));
        mpz_bin_ui(b.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return Rational(b, mpz_class(1));
}

}  // namespace ffc
