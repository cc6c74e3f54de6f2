#include <algorithm>
#include <mutex>
#include <sstream>

#include "ffcenter/yangian.hpp"

namespace ffc {

namespace {

std::size_t idx4(int N, int i, int k, int j, int l) {
    return static_cast<std::size_t>(((i * N + k) * N + j) * N + l);
}

void check_twist(const Form& f, const Matrix& C) {
    if (static_cast<int>(C.size()) != f.N) throw BadTwist();
    if (matmul(C, f.prime_of(C)) != identity_matrix(f.N)) throw BadTwist();
}

// coefficients of t_{ab}(z + c) up to z^{-order}
std::vector<UElement> shifted_entry(int N, int a, int b, const Rational& c, int order) {
    std::vector<UElement> out(static_cast<std::size_t>(order) + 1);
    if (a == b) out[0] = UElement(Rational(1));
    for (int e = 1; e <= order; ++e)
        for (int r = 1; r <= e; ++r) {
            Rational w = binomial(e - 1, e - r) * pow(-c, e - r);
            if (!w.is_zero()) out[static_cast<std::size_t>(e)].add(Word{t_code(N, r, a, b)}, w);
        }
    return out;
}

std::vector<UElement> series_mul(const std::vector<UElement>& x, const std::vector<UElement>& y) {
    std::vector<UElement> out(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; a + b < x.size(); ++b)
            if (!y[b].is_zero()) out[a + b] += free_mul(x[a], y[b]);
    }
    return out;
}

// operator terms: free word, power of z^{-1}, power of d/dz, power of h
using ZKey = std::tuple<Word, int, int, int>;
using ZOp = std::map<ZKey, Rational>;

int zdegree(int N, const ZKey& k) { return filtration_degree(N, std::get<0>(k)) - std::get<1>(k) - std::get<2>(k) - std::get<3>(k); }

Rational rising(int e, int i) {
    Rational p = 1;
    for (int t = 0; t < i; ++t) p *= Rational(e + t);
    return p;
}

// product with d/dz moved to the right; keeps terms of the given degree up to z^{-order}
ZOp zmul(int N, const ZOp& x, const ZOp& y, int order, int degree) {
    ZOp out;
    for (auto& [kx, cx] : x)
        for (auto& [ky, cy] : y) {
            const auto& [w1, e1, d1, h1] = kx;
            const auto& [w2, e2, d2, h2] = ky;
            for (int i = 0; i <= d1; ++i) {
                if (e1 + e2 + i > order) break;
                Rational c = binomial(d1, i) * rising(e2, i);
                if (c.is_zero()) continue;
                if (i % 2) c = -c;
                ZKey k{w1 + w2, e1 + e2 + i, d1 - i + d2, h1 + h2};
                if (zdegree(N, k) != degree) continue;
                out[k] += c * cx * cy;
            }
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

Matrix RMatrix::at(const Rational& u) const {
    if (u.is_zero() || u == kappa) throw PoleAtSpecialization("R-matrix pole");
    const int d = N * N;
    Matrix out = identity_matrix(d);
    for (auto& [rc, v] : P.entries()) out[rc.first][rc.second] -= v / u;
    for (auto& [rc, v] : Q.entries()) out[rc.first][rc.second] += v / (u - kappa);
    return out;
}

RMatrix rmatrix(CaseTag tag, int N) {
    Form f = build_form(tag, N);
    auto [P, Q] = pq_ops(0, 1, 2, f);
    return {tag, N, tag == CaseTag::orthogonal ? Rational(N, 2) - Rational(1) : Rational(N, 2) + Rational(1), P, Q};
}

Code t_code(int N, int r, int i, int j) {
    if (r < 1 || (r - 1) * N * N + N * N >= 0xFFFF) throw std::out_of_range("symbol index");
    return static_cast<Code>(((r - 1) * N + i) * N + j + 1);
}

TSymbol t_decode(int N, Code c) {
    int x = static_cast<int>(c) - 1;
    return {x / (N * N) + 1, (x / N) % N, x % N};
}

int filtration_degree(int N, const Word& w) {
    int d = 0;
    for (Code c : w) d += t_decode(N, c).r - 1;
    return d;
}

int filtration_degree(int N, const UElement& x) {
    int d = -1;
    for (auto& [w, c] : x.terms()) d = std::max(d, filtration_degree(N, w));
    return d;
}

UElement free_mul(const UElement& a, const UElement& b) {
    UElement out;
    for (auto& [w1, c1] : a.terms())
        for (auto& [w2, c2] : b.terms()) out.add(w1 + w2, c1 * c2);
    return out;
}

std::string free_str(int N, const UElement& x) {
    auto terms = x.sorted();
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (Code l : w) {
            auto s = t_decode(N, l);
            os << " t" << s.r << "[" << s.i + 1 << "," << s.j + 1 << "]";
        }
    }
    return os.str();
}

std::vector<UElement> bethe_series_shifted(CaseTag tag, int N, int m, const Matrix& C, int order, const std::vector<Rational>& shifts) {
    Form f = build_form(tag, N);
    check_twist(f, C);
    if (m < 1 || (tag == CaseTag::symplectic && m > N / 2)) throw OutOfRange();
    if (static_cast<int>(shifts.size()) != m || order < 0) throw std::invalid_argument("need one shift per copy and order >= 0");
    const TensorOp& S = symmetrizer_image(f, m);
    // W(c, a) = sum_b S_{a,b} prod_k C[b_k][c_k]
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> W;
    std::vector<int> c(static_cast<std::size_t>(m));
    for (auto& [rc, v] : S.entries()) {
        auto a = S.decode(rc.first), b = S.decode(rc.second);
        std::fill(c.begin(), c.end(), 0);
        while (true) {
            Rational w = v;
            for (int k = 0; k < m && !w.is_zero(); ++k) w *= C[b[k]][c[k]];
            if (!w.is_zero()) W[{c, a}] += w;
            int p = m - 1;
            while (p >= 0 && c[p] == N - 1) --p;
            if (p < 0) break;
            ++c[p];
            for (int q = p + 1; q < m; ++q) c[q] = 0;
        }
    }
    std::map<std::tuple<int, int, int>, std::vector<UElement>> entries;
    auto entry = [&](int k, int x, int y) -> const std::vector<UElement>& {
        auto key = std::make_tuple(k, x, y);
        auto it = entries.find(key);
        if (it == entries.end()) it = entries.emplace(key, shifted_entry(N, x, y, shifts[static_cast<std::size_t>(k)], order)).first;
        return it->second;
    };
    std::vector<UElement> out(static_cast<std::size_t>(order) + 1);
    for (auto& [ca, w] : W) {
        if (w.is_zero()) continue;
        const auto& [cc, a] = ca;
        std::vector<UElement> prod = entry(0, cc[0], a[0]);
        for (int k = 1; k < m; ++k) prod = series_mul(prod, entry(k, cc[k], a[k]));
        for (std::size_t e = 0; e < prod.size(); ++e) out[e] += prod[e] * w;
    }
    return out;
}

std::vector<UElement> bethe_series(CaseTag tag, int N, int m, const Matrix& C, int order) {
    std::vector<Rational> shifts;
    for (int k = 0; k < m; ++k) shifts.push_back(Rational(tag == CaseTag::orthogonal ? k : -k));
    return bethe_series_shifted(tag, N, m, C, order, shifts);
}

RttRules::RttRules(CaseTag tag, int N, int bound)
    : tag_(tag), N_(N), bound_(bound), R_(rmatrix(tag, N)), form_(build_form(tag, N)), kind_(static_cast<std::size_t>(N * N), 0) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            std::pair<int, int> partner{form_.prime(j), form_.prime(i)};
            if (partner < std::pair{i, j}) kind_[static_cast<std::size_t>(i * N + j)] = 1;
            else if (partner == std::pair{i, j}) {
                // t'_{ij} = c t_{ij}: c = 1 fixes t_{ij} by lower terms, c = -1 leaves it free
                Rational c = form_.G[i][form_.prime(i)] * form_.Ginv[form_.prime(j)][j];
                if (c == Rational(1)) kind_[static_cast<std::size_t>(i * N + j)] = 2;
                else if (c != Rational(-1)) throw std::logic_error("unexpected form");
            }
        }
    const std::size_t d = static_cast<std::size_t>(N) * N * N * N;
    Pm_.assign(d, Rational(0));
    Qm_.assign(d, Rational(0));
    for (auto& [rc, v] : R_.P.entries()) Pm_[rc.first * static_cast<std::size_t>(N * N) + rc.second] = v;
    for (auto& [rc, v] : R_.Q.entries()) Qm_[rc.first * static_cast<std::size_t>(N * N) + rc.second] = v;
}

UElement RttRules::t(int r, int a, int b) const {
    if (r < 0) return {};
    if (r == 0) return a == b ? UElement(Rational(1)) : UElement();
    return UElement::word(Word{t_code(N_, r, a, b)});
}

UElement RttRules::tprime_shifted(int p, int i, int k) const {
    // T'_{ik} = sum_{a,b} G_{ia} t_{ba} Ginv_{bk}; (z + kappa)^{-s} expanded in z^{-1}
    UElement out;
    for (int a = 0; a < N_; ++a) {
        if (form_.G[i][a].is_zero()) continue;
        for (int b = 0; b < N_; ++b) {
            Rational g = form_.G[i][a] * form_.Ginv[b][k];
            if (g.is_zero()) continue;
            for (int s = 1; s <= p; ++s) {
                Rational w = binomial(p - 1, p - s) * pow(-R_.kappa, p - s) * g;
                if (!w.is_zero()) out.add(Word{t_code(N_, s, b, a)}, w);
            }
        }
    }
    return out;
}

UElement RttRules::eliminate(int r, int i, int j) const {
    const int kind = kind_[static_cast<std::size_t>(i * N_ + j)];
    if (kind == 0) return t(r, i, j);
    auto key = std::make_tuple(r, i, j);
    {
        std::shared_lock lock(mu_);
        auto it = elim_memo_.find(key);
        if (it != elim_memo_.end()) return it->second;
    }
    // z^{-r} coefficient of T'(z+kappa) T(z) = 1 at (i, j)
    UElement rest = tprime_shifted(r, i, j);
    for (int p = 1; p < r; ++p)
        for (int k = 0; k < N_; ++k) rest += free_mul(tprime_shifted(p, i, k), t(r - p, k, j));
    UElement out;
    if (kind == 1) {
        out = -rest;
    } else {
        rest.add(Word{t_code(N_, r, i, j)}, Rational(-1));
        out = rest * Rational(-1, 2);
    }
    std::unique_lock lock(mu_);
    elim_memo_.emplace(key, out);
    return out;
}

UElement RttRules::relation(int i, int k, int j, int l, int a, int b) const {
    const int N = N_;
    const Rational& kap = R_.kappa;
    UElement out;
    // (u^2 - kappa u) [t_ij(z), t_kl(v)], u = z - v
    const std::vector<std::tuple<int, int, Rational>> quad{{2, 0, Rational(1)}, {1, 1, Rational(-2)}, {0, 2, Rational(1)}, {1, 0, -kap}, {0, 1, kap}};
    for (auto& [p, q, c] : quad) {
        int r = p - a, s = q - b;
        if (r < 1 || s < 1) continue;
        out += (free_mul(t(r, i, j), t(s, k, l)) - free_mul(t(s, k, l), t(r, i, j))) * c;
    }
    // u ((Q - P) T_1 T_2 - T_2 T_1 (Q - P))
    for (auto& [p, q, c] : std::vector<std::tuple<int, int, Rational>>{{1, 0, Rational(1)}, {0, 1, Rational(-1)}}) {
        int r = p - a, s = q - b;
        if (r < 0 || s < 0) continue;
        for (int x = 0; x < N; ++x)
            for (int y = 0; y < N; ++y) {
                Rational w1 = Qm_[idx4(N, i, k, x, y)] - Pm_[idx4(N, i, k, x, y)];
                if (!w1.is_zero()) out += free_mul(t(r, x, j), t(s, y, l)) * (c * w1);
                Rational w2 = Qm_[idx4(N, x, y, j, l)] - Pm_[idx4(N, x, y, j, l)];
                if (!w2.is_zero()) out -= free_mul(t(s, k, y), t(r, i, x)) * (c * w2);
            }
    }
    // kappa (P T_1 T_2 - T_2 T_1 P)
    int r = -a, s = -b;
    if (r >= 0 && s >= 0) out += (free_mul(t(r, k, j), t(s, i, l)) - free_mul(t(s, k, j), t(r, i, l))) * kap;
    return out;
}

UElement RttRules::commutator(int r, int i, int j, int s, int k, int l) const {
    if (r < 1 || s < 1) return {};
    auto key = std::make_tuple(r, i, j, s, k, l);
    {
        std::shared_lock lock(mu_);
        auto it = comm_memo_.find(key);
        if (it != comm_memo_.end()) return it->second;
    }
    // the z^{-r} v^{2-s} coefficient of the relation, solved for its v^2 commutator term
    const int N = N_;
    const Rational& kap = R_.kappa;
    UElement acc;
    for (auto& [p, q, c] : std::vector<std::tuple<int, int, Rational>>{{2, 0, Rational(1)}, {1, 1, Rational(-2)}, {1, 0, -kap}, {0, 1, kap}})
        acc += commutator(p + r, i, j, q - 2 + s, k, l) * c;
    for (auto& [p, q, c] : std::vector<std::tuple<int, int, Rational>>{{1, 0, Rational(1)}, {0, 1, Rational(-1)}}) {
        int r2 = p + r, s2 = q - 2 + s;
        if (s2 < 0) continue;
        for (int x = 0; x < N; ++x)
            for (int y = 0; y < N; ++y) {
                Rational w1 = Qm_[idx4(N, i, k, x, y)] - Pm_[idx4(N, i, k, x, y)];
                if (!w1.is_zero()) acc += free_mul(t(r2, x, j), t(s2, y, l)) * (c * w1);
                Rational w2 = Qm_[idx4(N, x, y, j, l)] - Pm_[idx4(N, x, y, j, l)];
                if (!w2.is_zero()) acc -= free_mul(t(s2, k, y), t(r2, i, x)) * (c * w2);
            }
    }
    if (s >= 2) acc += (free_mul(t(r, k, j), t(s - 2, i, l)) - free_mul(t(s - 2, k, j), t(r, i, l))) * kap;
    UElement out = -acc;
    std::unique_lock lock(mu_);
    comm_memo_.emplace(key, out);
    return out;
}

UElement RttRules::commutator_codes(Code a, Code b) const {
    auto x = t_decode(N_, a), y = t_decode(N_, b);
    return commutator(x.r, x.i, x.j, y.r, y.i, y.j);
}

UElement RttRules::normal_form_word(const Word& w, Schedule s) const {
    if (filtration_degree(N_, w) > bound_) return {};
    if (s == Schedule::leftmost) {
        std::shared_lock lock(mu_);
        auto it = nf_memo_.find(w);
        if (it != nf_memo_.end()) return it->second;
    }
    for (std::size_t q = 0; q < w.size(); ++q) {
        auto sym = t_decode(N_, w[q]);
        if (independent(sym.i, sym.j)) continue;
        UElement out;
        Word prefix = w.substr(0, q), suffix = w.substr(q + 1);
        UElement e = eliminate(sym.r, sym.i, sym.j);
        for (auto& [ew, c] : e.terms()) out += normal_form_word(prefix + ew + suffix, s) * c;
        if (s == Schedule::leftmost) {
            std::unique_lock lock(mu_);
            nf_memo_.emplace(w, out);
        }
        return out;
    }
    std::ptrdiff_t p = -1;
    for (std::size_t q = 0; q + 1 < w.size(); ++q)
        if (w[q] > w[q + 1]) {
            p = static_cast<std::ptrdiff_t>(q);
            if (s == Schedule::leftmost) break;
        }
    UElement out;
    if (p < 0) {
        out = UElement::word(w);
    } else {
        const std::size_t q = static_cast<std::size_t>(p);
        Word swapped = w;
        std::swap(swapped[q], swapped[q + 1]);
        out = normal_form_word(swapped, s);
        Word prefix = w.substr(0, q), suffix = w.substr(q + 2);
        UElement br = commutator_codes(w[q], w[q + 1]);
        for (auto& [cw, c] : br.terms()) out += normal_form_word(prefix + cw + suffix, s) * c;
    }
    if (s == Schedule::leftmost) {
        std::unique_lock lock(mu_);
        nf_memo_.emplace(w, out);
    }
    return out;
}

UElement RttRules::normal_form(const UElement& x, Schedule s) const {
    UElement out;
    for (auto& [w, c] : x.terms()) out += normal_form_word(w, s) * c;
    return out;
}

CommutativityReport bounded_commutativity(CaseTag tag, int N, const Matrix& C, int bound) {
    RttRules rules(tag, N, bound);
    CommutativityReport rep;
    rep.bound = bound;
    struct Coef {
        std::string name;
        UElement x;
        int degree;
    };
    std::vector<Coef> coefs;
    for (int m = 1; m <= 2; ++m) {
        auto tau = bethe_series(tag, N, m, C, bound + 1);
        for (std::size_t e = 1; e < tau.size(); ++e)
            if (!tau[e].is_zero()) coefs.push_back({"tau" + std::to_string(m) + "^(" + std::to_string(e) + ")", tau[e], filtration_degree(N, tau[e])});
    }
    rep.pass = true;
    for (std::size_t a = 0; a < coefs.size(); ++a)
        for (std::size_t b = a + 1; b < coefs.size(); ++b) {
            int d = coefs[a].degree + coefs[b].degree;
            if (d > bound) continue;
            UElement c = free_mul(coefs[a].x, coefs[b].x) - free_mul(coefs[b].x, coefs[a].x);
            bool ok = rules.normal_form(c).is_zero();
            rep.checks.push_back({coefs[a].name, coefs[b].name, d, ok});
            rep.pass = rep.pass && ok;
        }
    return rep;
}

UElement symbol_image(const Algebra& alg, const UElement& x) {
    const int N = alg.N();
    UElement out;
    for (auto& [w, c] : x.terms()) {
        Word img;
        Rational coef = c;
        for (Code l : w) {
            auto s = t_decode(N, l);
            const auto& e = alg.entry(s.i, s.j);
            if (e.pair < 0) {
                coef = 0;
                break;
            }
            coef *= e.coeff;
            img.push_back(alg.code(e.pair, s.r - 1));
        }
        if (!coef.is_zero()) out += alg.normalize(img) * coef;
    }
    return out;
}

GradedReport graded_compare(const Algebra& alg, int m, const Matrix& B, int order) {
    const Form& f = alg.form();
    const int N = f.N;
    check_b_matrix(f, B);
    if (m < 1 || (f.tag == CaseTag::symplectic && m > N / 2)) throw OutOfRange();
    if (order < 1) throw std::invalid_argument("order must be positive");

    // C = 1 + sum_j 2^{1-j} h^j B^j
    std::vector<Matrix> Cj{identity_matrix(N)};
    for (int j = 1; j <= m; ++j) Cj.push_back(matmul(Cj.back(), B));
    for (int j = 1; j <= m; ++j)
        for (auto& row : Cj[static_cast<std::size_t>(j)])
            for (auto& x : row) x *= pow(Rational(1, 2), j - 1);

    // M = 1 - e^{-d} C T(z), kept to degree >= -m
    std::vector<std::vector<ZOp>> M(static_cast<std::size_t>(N), std::vector<ZOp>(static_cast<std::size_t>(N)));
    for (int a = 0; a < N; ++a) {
        M[a][a][{Word(), 0, 0, 0}] += 1;
        for (int c = 0; c < N; ++c)
            for (int j = 0; j <= m; ++j) {
                const Rational& Cac = Cj[static_cast<std::size_t>(j)][a][c];
                if (Cac.is_zero()) continue;
                for (int k = 0; j + k <= m; ++k) {
                    Rational ek = factorial(k);
                    ek = (k % 2 ? Rational(-1) : Rational(1)) / ek;
                    for (int b = 0; b < N; ++b) {
                        auto& dst = M[a][b];
                        if (c == b) dst[{Word(), 0, k, j}] -= Cac * ek;
                        for (int r = 1; r <= order && j + k < m; ++r)
                            for (int i = 0; i <= k && r + i <= order; ++i) {
                                Rational w = binomial(k, i) * rising(r, i) * Cac * ek;
                                if (i % 2) w = -w;
                                dst[{Word{t_code(N, r, c, b)}, r + i, k - i, j}] -= w;
                            }
                    }
                }
            }
    }
    for (auto& row : M)
        for (auto& x : row) {
            for (auto it = x.begin(); it != x.end();) it = it->second.is_zero() ? x.erase(it) : std::next(it);
            for (auto& [k, c] : x)
                if (zdegree(N, k) >= 0) throw std::logic_error("degree-0 part of 1 - e^{-d} C T(z) must cancel");
        }

    const TensorOp& S = symmetrizer_image(f, m);
    ZOp theta;
    for (auto& [rc, v] : S.entries()) {
        auto a = S.decode(rc.first), b = S.decode(rc.second);
        ZOp prod;
        for (auto& [k, c] : M[b[0]][a[0]])
            if (zdegree(N, k) == -1) prod[k] = c;
        for (int t = 1; t < m && !prod.empty(); ++t) prod = zmul(N, prod, M[b[t]][a[t]], order, -(t + 1));
        for (auto& [k, c] : prod) theta[k] += c * v;
    }

    Rational scale = f.tag == CaseTag::symplectic ? Rational(1, N / 2 - m + 1) : Rational(1);
    std::vector<std::vector<UElement>> img(static_cast<std::size_t>(m) + 1, std::vector<UElement>(static_cast<std::size_t>(order) + 1));
    for (auto& [k, c] : theta) {
        if (c.is_zero()) continue;
        const auto& [w, e, d, h] = k;
        img[static_cast<std::size_t>(m - d)][static_cast<std::size_t>(e)] += symbol_image(alg, UElement::word(w)) * (c * scale);
    }
    GtCoefficients gt = gt_generators(alg, m, B, order);
    GradedReport rep;
    rep.pass = true;
    for (int i = 0; i <= m; ++i)
        for (int e = 0; e <= order; ++e) {
            bool ok = img[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] == gt.l[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
            rep.entries.push_back({i, e, ok});
            rep.pass = rep.pass && ok;
        }
    return rep;
}

}  // namespace ffc
