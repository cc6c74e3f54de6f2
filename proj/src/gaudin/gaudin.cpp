#include <algorithm>
#include <numeric>
#include <tuple>

#include "ffcenter/gaudin.hpp"

namespace ffc {

namespace {

Matrix rect(std::size_t r, std::size_t c) { return Matrix(r, std::vector<Rational>(c)); }

Matrix mul_dense(const Matrix& a, const Matrix& b) {
    Matrix c = rect(a.size(), b.empty() ? 0 : b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < c[i].size(); ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

void add_scaled(Matrix& acc, const Matrix& x, const Rational& c) {
    if (acc.empty()) acc = rect(x.size(), x.empty() ? 0 : x[0].size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[i].size(); ++j)
            if (!x[i][j].is_zero()) acc[i][j] += c * x[i][j];
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c = rect(a.size() * b.size(), a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b.size(); ++l) c[i * b.size() + k][j * b.size() + l] = a[i][j] * b[k][l];
        }
    return c;
}

// op acting in tensor position site
Matrix embed(const std::vector<EvalModule>& modules, std::size_t site, const Matrix& op) {
    Matrix out{{Rational(1)}};
    for (std::size_t s = 0; s < modules.size(); ++s) out = kron(out, s == site ? op : identity_matrix(static_cast<int>(modules[s].rep[0].size())));
    return out;
}

std::size_t total_dim(const std::vector<EvalModule>& modules) {
    std::size_t d = 1;
    for (auto& m : modules) d *= m.rep[0].size();
    return d;
}

int half_rank(const Form& f) { return f.N / 2; }

void check_m(const Algebra& alg, int m) {
    if (m < 1 || (alg.tag() == CaseTag::symplectic && m > alg.N())) throw OutOfRange();
}

std::vector<std::vector<SlotKind>> all_patterns(int m) {
    std::vector<std::vector<SlotKind>> out{{}};
    for (int t = 0; t < m; ++t) {
        std::vector<std::vector<SlotKind>> next;
        for (auto& p : out)
            for (SlotKind k : {SlotKind::deriv, SlotKind::constant, SlotKind::letter}) {
                next.push_back(p);
                next.back().push_back(k);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

void check_b_matrix(const Form& f, const Matrix& B) {
    if (static_cast<int>(B.size()) != f.N) throw std::invalid_argument("B has the wrong size");
    Matrix p = f.prime_of(B);
    for (int i = 0; i < f.N; ++i)
        for (int j = 0; j < f.N; ++j)
            if (!(B[i][j] + p[i][j]).is_zero()) throw std::invalid_argument("B + B' must vanish");
}

Matrix diagonal_b(const Form& f, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != half_rank(f)) throw std::invalid_argument("need one entry per half-rank index");
    Matrix B = zero_matrix(f.N);
    for (int i = 0; i < half_rank(f); ++i) {
        B[i][i] = b[static_cast<std::size_t>(i)];
        B[f.prime(i)][f.prime(i)] = -b[static_cast<std::size_t>(i)];
    }
    return B;
}

PairWeights slot_weights(const Algebra& alg, const Matrix& B, const std::vector<SlotKind>& kinds) {
    const int m = static_cast<int>(kinds.size());
    const Form& f = alg.form();
    const int n = half_rank(f);
    PairWeights out;
    if (f.tag == CaseTag::orthogonal || m <= n) {
        const TensorOp& S = symmetrizer_image(f, m);
        Rational scale = f.tag == CaseTag::symplectic ? Rational(1, n - m + 1) : Rational(1);
        std::vector<int> tuple;
        for (auto& [rc, v] : S.entries()) {
            auto a = S.decode(rc.first), b = S.decode(rc.second);
            Rational c = v * scale;
            tuple.clear();
            for (int k = 0; k < m && !c.is_zero(); ++k) {
                int bk = b[static_cast<std::size_t>(k)], ak = a[static_cast<std::size_t>(k)];
                switch (kinds[static_cast<std::size_t>(k)]) {
                    case SlotKind::deriv:
                        if (ak != bk) c = 0;
                        break;
                    case SlotKind::constant:
                        c *= -B[bk][ak];
                        break;
                    case SlotKind::letter: {
                        const auto& e = alg.entry(bk, ak);
                        if (e.pair < 0) c = 0;
                        else {
                            c *= -e.coeff;
                            tuple.push_back(e.pair);
                        }
                    }
                }
            }
            if (!c.is_zero()) out[tuple] += c;
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }
    if (m > 2 * n) throw OutOfRange();
    auto mats = generator_matrices(alg);
    Matrix minusB = B;
    for (auto& row : minusB)
        for (auto& x : row) x = -x;
    const int s = static_cast<int>(std::count(kinds.begin(), kinds.end(), SlotKind::letter));
    const int P = alg.num_pairs();
    std::vector<int> tuple(static_cast<std::size_t>(s), 0);
    while (true) {
        TaggedScalarWord w{n, {}};
        std::size_t next = 0;
        for (SlotKind k : kinds) {
            if (k == SlotKind::deriv) w.slots.push_back({identity_matrix(f.N), SlotTag::identity});
            else if (k == SlotKind::constant) w.slots.push_back({minusB, SlotTag::skew});
            else {
                Matrix M = mats[static_cast<std::size_t>(tuple[next++])];
                for (auto& row : M)
                    for (auto& x : row) x = -x;
                w.slots.push_back({M, SlotTag::skew});
            }
        }
        Rational v = reduce_trace_symplectic(w);
        if (!v.is_zero()) out[tuple] = v;
        int i = s - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == P - 1) --i;
        if (i < 0) break;
        ++tuple[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < s; ++k) tuple[static_cast<std::size_t>(k)] = 0;
    }
    return out;
}

GtCoefficients gt_generators(const Algebra& alg, int m, const Matrix& B, int order, int max_mode) {
    check_m(alg, m);
    check_b_matrix(alg.form(), B);
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    const int rmax = max_mode < 0 ? order - 1 : max_mode;
    // (letters as (label, mode), z-degree e, power k of d/dz) -> coefficient
    using State = std::map<std::tuple<LetterSeq, int, int>, Rational>;
    std::map<std::pair<int, int>, std::map<Word, Rational>> acc;
    for (auto& kinds : all_patterns(m)) {
        State st{{{LetterSeq(), 0, 0}, Rational(1)}};
        int label = static_cast<int>(std::count(kinds.begin(), kinds.end(), SlotKind::letter));
        for (int t = m - 1; t >= 0; --t) {
            State next;
            SlotKind kind = kinds[static_cast<std::size_t>(t)];
            if (kind == SlotKind::letter) --label;
            for (auto& [key, c] : st) {
                const auto& [seq, e, k] = key;
                if (kind == SlotKind::constant) {
                    next[key] += c;
                } else if (kind == SlotKind::deriv) {
                    next[{seq, e, k + 1}] += c;
                    if (e > 0 && e + 1 <= order) next[{seq, e + 1, k}] += c * Rational(-e);
                } else {
                    for (int r = 0; r <= rmax && e + r + 1 <= order; ++r) {
                        LetterSeq s2{{label, r}};
                        s2.insert(s2.end(), seq.begin(), seq.end());
                        next[{s2, e + r + 1, k}] += c;
                    }
                }
            }
            st.clear();
            for (auto& [key, c] : next)
                if (!c.is_zero()) st.emplace(key, c);
            if (st.empty()) break;
        }
        if (st.empty()) continue;
        PairWeights w = slot_weights(alg, B, kinds);
        for (auto& [key, c] : st) {
            const auto& [seq, e, k] = key;
            auto& bucket = acc[{m - k, e}];
            for (auto& [tuple, wt] : w) {
                Word word;
                for (auto [lab, mode] : seq) word.push_back(alg.code(tuple[static_cast<std::size_t>(lab)], mode));
                bucket[word] += c * wt;
            }
        }
    }
    GtCoefficients out{m, order, std::vector<std::vector<UElement>>(static_cast<std::size_t>(m) + 1, std::vector<UElement>(static_cast<std::size_t>(order) + 1))};
    for (auto& [ie, words] : acc)
        for (auto& [w, c] : words)
            if (!c.is_zero()) out.l[static_cast<std::size_t>(ie.first)][static_cast<std::size_t>(ie.second)] += alg.normalize(w) * c;
    return out;
}

std::vector<Matrix> vector_representation(const Algebra& alg) {
    const Form& f = alg.form();
    std::vector<Matrix> out;
    for (int p = 0; p < alg.num_pairs(); ++p) {
        auto [i, j] = alg.pair(p);
        Matrix e = zero_matrix(f.N);
        e[i][j] = 1;
        Matrix q = matmul(matmul(f.G, transpose(e)), f.Ginv);
        for (int a = 0; a < f.N; ++a)
            for (int b = 0; b < f.N; ++b) e[a][b] -= q[a][b];
        out.push_back(e);
    }
    return out;
}

EvalModule evaluation_module(const Algebra& alg, const std::vector<Matrix>& rep, const Rational& a) {
    if (static_cast<int>(rep.size()) != alg.num_pairs() || rep.empty()) throw NotARepresentation();
    const std::size_t d = rep[0].size();
    for (auto& M : rep) {
        if (M.size() != d) throw NotARepresentation();
        for (auto& row : M)
            if (row.size() != d) throw NotARepresentation();
    }
    for (int p = 0; p < alg.num_pairs(); ++p)
        for (int q = 0; q < alg.num_pairs(); ++q) {
            Matrix lhs = mul_dense(rep[p], rep[q]);
            add_scaled(lhs, mul_dense(rep[q], rep[p]), Rational(-1));
            Matrix rhs = rect(d, d);
            for (auto& [x, c] : alg.bracket(p, q).terms) add_scaled(rhs, rep[static_cast<std::size_t>(x)], c);
            if (lhs != rhs) throw NotARepresentation();
        }
    return {rep, a};
}

Matrix evaluate_on_modules(const Algebra& alg, const std::vector<EvalModule>& modules, const UElement& x) {
    const std::size_t d = total_dim(modules);
    // images of F_p[r] cached per letter
    std::map<Code, Matrix> img;
    auto image = [&](Code c) -> const Matrix& {
        auto it = img.find(c);
        if (it != img.end()) return it->second;
        if (c == Algebra::kCentral) throw std::invalid_argument("central element has no evaluation image");
        int p = alg.code_pair(c), r = alg.code_mode(c);
        if (r < 0) throw std::invalid_argument("negative modes have no evaluation image");
        Matrix acc = rect(d, d);
        for (std::size_t s = 0; s < modules.size(); ++s) {
            Rational ar = pow(modules[s].point, r);
            if (ar.is_zero()) continue;
            add_scaled(acc, embed(modules, s, modules[s].rep[static_cast<std::size_t>(p)]), ar);
        }
        return img.emplace(c, std::move(acc)).first->second;
    };
    Matrix out = rect(d, d);
    for (auto& [w, c] : x.terms()) {
        Matrix op = identity_matrix(static_cast<int>(d));
        for (Code l : w) op = mul_dense(op, image(l));
        add_scaled(out, op, c);
    }
    return out;
}

GaudinFamily::GaudinFamily(const Algebra& alg, const std::vector<EvalModule>& modules, const Matrix& B, int m)
    : m_(m), dim_(total_dim(modules)) {
    check_m(alg, m);
    check_b_matrix(alg.form(), B);
    if (modules.empty()) throw std::invalid_argument("need at least one module");
    for (std::size_t s = 0; s < modules.size(); ++s) {
        for (std::size_t t = 0; t < s; ++t)
            if (modules[s].point == modules[t].point) throw CoincidentPoints();
        points_.push_back(modules[s].point);
    }
    const std::size_t sites = modules.size();
    // embedded site operators per pair
    std::vector<std::vector<Matrix>> ops(sites);
    for (std::size_t s = 0; s < sites; ++s)
        for (auto& M : modules[s].rep) ops[s].push_back(embed(modules, s, M));

    // (letters as (label, site), powers of 1/(z - a_s), power of d/dz)
    using State = std::map<std::tuple<LetterSeq, std::vector<int>, int>, Rational>;
    for (auto& kinds : all_patterns(m)) {
        State st{{{LetterSeq(), std::vector<int>(sites, 0), 0}, Rational(1)}};
        int label = static_cast<int>(std::count(kinds.begin(), kinds.end(), SlotKind::letter));
        for (int t = m - 1; t >= 0; --t) {
            State next;
            SlotKind kind = kinds[static_cast<std::size_t>(t)];
            if (kind == SlotKind::letter) --label;
            for (auto& [key, c] : st) {
                const auto& [seq, pw, k] = key;
                if (kind == SlotKind::constant) {
                    next[key] += c;
                } else if (kind == SlotKind::deriv) {
                    next[{seq, pw, k + 1}] += c;
                    for (std::size_t s = 0; s < sites; ++s) {
                        if (pw[s] == 0) continue;
                        auto p2 = pw;
                        ++p2[s];
                        next[{seq, p2, k}] += c * Rational(-pw[s]);
                    }
                } else {
                    for (std::size_t s = 0; s < sites; ++s) {
                        LetterSeq s2{{label, static_cast<int>(s)}};
                        s2.insert(s2.end(), seq.begin(), seq.end());
                        auto p2 = pw;
                        ++p2[s];
                        next[{s2, p2, k}] += c;
                    }
                }
            }
            st.clear();
            for (auto& [key, c] : next)
                if (!c.is_zero()) st.emplace(key, c);
        }
        if (st.empty()) continue;
        PairWeights w = slot_weights(alg, B, kinds);
        for (auto& [key, c] : st) {
            const auto& [seq, pw, k] = key;
            Matrix& acc = terms_[{k, pw}];
            for (auto& [tuple, wt] : w) {
                Matrix op = identity_matrix(static_cast<int>(dim_));
                for (auto [lab, site] : seq) op = mul_dense(op, ops[static_cast<std::size_t>(site)][static_cast<std::size_t>(tuple[static_cast<std::size_t>(lab)])]);
                add_scaled(acc, op, c * wt);
            }
        }
    }
}

Matrix GaudinFamily::at(int i, const Rational& z) const {
    Matrix out = rect(dim_, dim_);
    for (auto& [key, op] : terms_) {
        if (key.k != m_ - i) continue;
        Rational f = 1;
        for (std::size_t s = 0; s < points_.size(); ++s) {
            if (key.powers[s] == 0) continue;
            if (z == points_[s]) throw std::domain_error("evaluation at a marked point");
            f /= pow(z - points_[s], key.powers[s]);
        }
        add_scaled(out, op, f);
    }
    return out;
}

Matrix GaudinFamily::series_coefficient(int i, int e) const {
    Matrix out = rect(dim_, dim_);
    for (auto& [key, op] : terms_) {
        if (key.k != m_ - i) continue;
        // coefficients of u^t, u = 1/z, in prod_s (z - a_s)^{-j_s}
        std::vector<Rational> series(static_cast<std::size_t>(e) + 1);
        series[0] = 1;
        for (std::size_t s = 0; s < points_.size(); ++s) {
            int j = key.powers[s];
            if (j == 0) continue;
            std::vector<Rational> f(static_cast<std::size_t>(e) + 1);
            for (int t = 0; j + t <= e; ++t) f[static_cast<std::size_t>(j + t)] = binomial(j + t - 1, t) * pow(points_[s], t);
            std::vector<Rational> g(static_cast<std::size_t>(e) + 1);
            for (int a = 0; a <= e; ++a)
                if (!series[static_cast<std::size_t>(a)].is_zero())
                    for (int b = 0; a + b <= e; ++b) g[static_cast<std::size_t>(a + b)] += series[static_cast<std::size_t>(a)] * f[static_cast<std::size_t>(b)];
            series = std::move(g);
        }
        if (!series[static_cast<std::size_t>(e)].is_zero()) add_scaled(out, op, series[static_cast<std::size_t>(e)]);
    }
    return out;
}

std::vector<UElement> pfaffian_expansion(const Algebra& alg, const Matrix& B) {
    if (alg.tag() != CaseTag::orthogonal || alg.N() % 2) throw std::invalid_argument("Pfaffian needs an even orthogonal algebra");
    const Form& f = alg.form();
    const int N = f.N, n = N / 2;
    Matrix Bt = matmul(B, f.G);
    std::vector<UElement> Ft(static_cast<std::size_t>(N * N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                if (!f.G[k][j].is_zero()) Ft[static_cast<std::size_t>(i * N + j)] += alg.generator(i, k, 0) * f.G[k][j];
    std::vector<std::map<Word, Rational>> acc(static_cast<std::size_t>(n) + 1);
    std::vector<int> p(static_cast<std::size_t>(N));
    std::iota(p.begin(), p.end(), 0);
    do {
        int inv = 0;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (p[a] > p[b]) ++inv;
        Rational sign = inv % 2 ? -1 : 1;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::pair<Word, Rational>> cur{{Word(), sign}};
            for (int k = 0; k < n && !cur.empty(); ++k) {
                int i = p[2 * k], j = p[2 * k + 1];
                std::vector<std::pair<Word, Rational>> next;
                if ((mask >> k) & 1u) {
                    for (auto& [w, x] : cur)
                        for (auto& [l, y] : Ft[static_cast<std::size_t>(i * N + j)].terms()) next.emplace_back(w + l, x * y);
                } else if (!Bt[i][j].is_zero()) {
                    for (auto& [w, x] : cur) next.emplace_back(w, x * Bt[i][j]);
                }
                cur = std::move(next);
            }
            auto& bucket = acc[static_cast<std::size_t>(__builtin_popcount(mask))];
            for (auto& [w, x] : cur) bucket[w] += x;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    Rational scale = Rational(1) / (pow(Rational(2), n) * factorial(n));
    std::vector<UElement> out(static_cast<std::size_t>(n) + 1);
    for (int r = 0; r <= n; ++r)
        for (auto& [w, c] : acc[static_cast<std::size_t>(r)])
            if (!c.is_zero()) out[static_cast<std::size_t>(r)] += alg.normalize(w) * (c * scale);
    return out;
}

std::vector<NamedElement> shift_of_argument(const Algebra& alg, const Matrix& B) {
    check_b_matrix(alg.form(), B);
    const int N = alg.N();
    const bool type_d = alg.tag() == CaseTag::orthogonal && N % 2 == 0;
    const int n = N / 2;
    const int kmax = type_d ? n - 1 : n;
    std::vector<NamedElement> out;
    for (int k = 1; k <= kmax; ++k) {
        const int m = 2 * k;
        GtCoefficients g = gt_generators(alg, m, B, m, 0);
        for (int s = 1; s <= m; ++s)
            out.push_back({"l[" + std::to_string(m) + "," + std::to_string(m) + "]^(" + std::to_string(s) + ")", g.l[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)]});
    }
    if (type_d) {
        auto p = pfaffian_expansion(alg, B);
        for (int r = 1; r <= n; ++r) out.push_back({"p^(" + std::to_string(r) + ")", p[static_cast<std::size_t>(r)]});
    }
    return out;
}

}  // namespace ffc
