#include <algorithm>
#include <numeric>

#include "ffcenter/howe.hpp"

namespace ffc {

namespace {

void tuples(int N, int m, bool strict, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < N; ++i) {
        cur.push_back(i);
        tuples(N, m, strict, strict ? i + 1 : i, cur, out);
        cur.pop_back();
    }
}

void add_to(Poly& p, const std::vector<int>& mono, const Rational& c) {
    if (c.is_zero()) return;
    Rational& x = p[mono];
    x += c;
    if (x.is_zero()) p.erase(mono);
}

// z_i * mono, or zeta_i wedge mono
bool mul_var(CaseTag tag, int i, std::vector<int>& mono, Rational& sign) {
    auto pos = std::lower_bound(mono.begin(), mono.end(), i);
    if (tag == CaseTag::symplectic) {
        if (pos != mono.end() && *pos == i) return false;
        if ((pos - mono.begin()) % 2) sign = -sign;
    }
    mono.insert(pos, i);
    return true;
}

// d/dz_i, or the left derivative over zeta_i
bool diff_var(CaseTag tag, int i, std::vector<int>& mono, Rational& sign) {
    auto pos = std::lower_bound(mono.begin(), mono.end(), i);
    if (pos == mono.end() || *pos != i) return false;
    if (tag == CaseTag::symplectic) {
        if ((pos - mono.begin()) % 2) sign = -sign;
    } else {
        sign *= Rational(static_cast<long>(std::upper_bound(pos, mono.end(), i) - pos));
    }
    mono.erase(pos);
    return true;
}

// sum over i of c * op_i op_{i'} applied to x; i runs over 1..N (orthogonal) or 1..n (symplectic)
Poly pair_op(CaseTag tag, int N, const Poly& x, bool raise, const Rational& c) {
    Poly out;
    const int top = tag == CaseTag::orthogonal ? N : N / 2;
    for (auto& [mono, v] : x)
        for (int i = 0; i < top; ++i) {
            std::vector<int> w = mono;
            Rational s = v * c;
            // the right factor acts first
            bool ok = raise ? mul_var(tag, N - 1 - i, w, s) && mul_var(tag, i, w, s) : diff_var(tag, N - 1 - i, w, s) && diff_var(tag, i, w, s);
            if (ok) add_to(out, w, s);
        }
    return out;
}

Matrix map_matrix(const PolyComponent& from, const PolyComponent& to, Poly (*op)(CaseTag, int, const Poly&)) {
    Matrix out(to.dim(), std::vector<Rational>(from.dim()));
    for (std::size_t c = 0; c < from.dim(); ++c) {
        Poly y = op(from.tag, from.N, Poly{{from.basis[c], Rational(1)}});
        for (auto& [mono, v] : y) out[static_cast<std::size_t>(to.index(mono))][c] = v;
    }
    return out;
}

std::size_t max_degree(CaseTag tag, int N) { return tag == CaseTag::symplectic ? static_cast<std::size_t>(N) : SIZE_MAX; }

}  // namespace

int PolyComponent::index(const std::vector<int>& mono) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), mono);
    if (it == basis.end() || *it != mono) throw std::out_of_range("monomial outside the component");
    return static_cast<int>(it - basis.begin());
}

PolyComponent poly_component(CaseTag tag, int N, int m) {
    if (m < 0 || static_cast<std::size_t>(m) > max_degree(tag, N)) throw BadDegree();
    if (tag == CaseTag::symplectic && N % 2) throw OddSymplecticDimension();
    PolyComponent c{tag, N, m, {}};
    std::vector<int> cur;
    tuples(N, m, tag == CaseTag::symplectic, 0, cur, c.basis);
    return c;
}

Poly sl2_e(CaseTag tag, int N, const Poly& x) {
    return pair_op(tag, N, x, false, tag == CaseTag::orthogonal ? Rational(-1, 2) : Rational(1));
}

Poly sl2_f(CaseTag tag, int N, const Poly& x) {
    return pair_op(tag, N, x, true, tag == CaseTag::orthogonal ? Rational(1, 2) : Rational(-1));
}

Rational sl2_h_scalar(CaseTag tag, int N, int m) {
    return tag == CaseTag::orthogonal ? Rational(-N, 2) - Rational(m) : Rational(N / 2 - m);
}

SL2Action sl2_action(CaseTag tag, int N, int m) {
    SL2Action a;
    a.source = poly_component(tag, N, m);
    PolyComponent empty{tag, N, -1, {}};
    PolyComponent lower = m >= 2 ? poly_component(tag, N, m - 2) : empty;
    PolyComponent upper = static_cast<std::size_t>(m + 2) <= max_degree(tag, N) ? poly_component(tag, N, m + 2) : empty;
    a.e = map_matrix(a.source, lower, sl2_e);
    a.f = map_matrix(a.source, upper, sl2_f);
    a.h = Matrix(a.source.dim(), std::vector<Rational>(a.source.dim()));
    Rational h = sl2_h_scalar(tag, N, m);
    for (std::size_t i = 0; i < a.source.dim(); ++i) a.h[i][i] = h;
    return a;
}

Matrix extremal_projector(CaseTag tag, int N, int m) {
    if (tag == CaseTag::symplectic && m > N / 2) throw NoSingularRange();
    PolyComponent comp = poly_component(tag, N, m);
    const Rational h = sl2_h_scalar(tag, N, m);
    // coefficients (-1)^r / (r! (h+2)...(h+r+1))
    std::vector<Rational> coef{Rational(1)};
    for (int r = 1; 2 * r <= m; ++r) coef.push_back(coef.back() * Rational(-1) / (Rational(r) * (h + Rational(r + 1))));
    Matrix out(comp.dim(), std::vector<Rational>(comp.dim()));
    for (std::size_t c = 0; c < comp.dim(); ++c) {
        Poly total{{comp.basis[c], Rational(1)}};
        Poly er = total;
        for (int r = 1; 2 * r <= m; ++r) {
            er = sl2_e(tag, N, er);
            if (er.empty()) break;
            Poly fr = er;
            for (int k = 0; k < r; ++k) fr = sl2_f(tag, N, fr);
            for (auto& [mono, v] : fr) add_to(total, mono, v * coef[static_cast<std::size_t>(r)]);
        }
        for (auto& [mono, v] : total) out[static_cast<std::size_t>(comp.index(mono))][c] = v;
    }
    return out;
}

Matrix symmetrizer_on_component(CaseTag tag, int N, int m) {
    PolyComponent comp = poly_component(tag, N, m);
    const TensorOp& S = symmetrizer_image(build_form(tag, N), m);
    const bool ext = tag == CaseTag::symplectic;
    auto multiplicity = [&](const std::vector<int>& t) {
        Rational c = factorial(m);
        for (std::size_t k = 0; k < t.size();) {
            std::size_t e = k;
            while (e < t.size() && t[e] == t[k]) ++e;
            c /= factorial(static_cast<int>(e - k));
            k = e;
        }
        return c;
    };
    Matrix out(comp.dim(), std::vector<Rational>(comp.dim()));
    // S applied to H(e_alpha); the image is read off at sorted rows
    for (auto& [rc, v] : S.entries()) {
        auto row = S.decode(rc.first), col = S.decode(rc.second);
        bool sorted_row = true;
        for (std::size_t k = 0; k + 1 < row.size(); ++k)
            if (ext ? row[k] >= row[k + 1] : row[k] > row[k + 1]) sorted_row = false;
        if (!sorted_row) continue;
        std::vector<int> alpha = col;
        Rational w = 1;
        if (ext) {
            for (std::size_t a = 0; a < alpha.size(); ++a)
                for (std::size_t b = a + 1; b < alpha.size(); ++b)
                    if (alpha[a] > alpha[b]) w = -w;
            std::sort(alpha.begin(), alpha.end());
            if (std::adjacent_find(alpha.begin(), alpha.end()) != alpha.end()) continue;
        } else {
            std::sort(alpha.begin(), alpha.end());
            w = multiplicity(row) / multiplicity(alpha);
        }
        out[static_cast<std::size_t>(comp.index(row))][static_cast<std::size_t>(comp.index(alpha))] += v * w;
    }
    return out;
}

TauPoly singular_trace_phi(const Algebra& alg, int m) {
    const CaseTag tag = alg.tag();
    const int N = alg.N();
    const bool ext = tag == CaseTag::symplectic;
    Matrix p = extremal_projector(tag, N, m);
    PolyComponent comp = poly_component(tag, N, m);
    Rational scale = ext ? Rational(1, N / 2 - m + 1) : Rational(1);

    // tau expansion per letter pattern
    std::vector<std::map<std::pair<LetterSeq, int>, Rational>> patterns(1u << m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<TauFactor> f;
        int label = 0;
        for (int t = 0; t < m; ++t) f.push_back((mask >> t) & 1u ? TauFactor{false, label++, -1} : TauFactor{true, 0, 0});
        patterns[mask] = tau_expand(f);
    }

    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
    do {
        perms.push_back(perm);
        int inv = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (perm[a] > perm[b]) ++inv;
        signs.push_back(inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<std::pair<int, Word>, Rational> acc;
    std::vector<int> rows(static_cast<std::size_t>(m)), cols(static_cast<std::size_t>(m));
    for (std::size_t ii = 0; ii < comp.dim(); ++ii)
        for (std::size_t jj = 0; jj < comp.dim(); ++jj) {
            // trace of p Phi: p_{ji} times the (i, j) entry of Phi^(m)
            const Rational& pji = p[jj][ii];
            if (pji.is_zero()) continue;
            const auto& I = comp.basis[ii];
            const auto& J = comp.basis[jj];
            Rational norm = factorial(m);
            if (!ext)
                for (std::size_t k = 0; k < I.size();) {
                    std::size_t e = k;
                    while (e < I.size() && I[e] == I[k]) ++e;
                    norm *= factorial(static_cast<int>(e - k));
                    k = e;
                }
            Rational base = pji * scale / norm;
            for (std::size_t s = 0; s < perms.size(); ++s)
                for (std::size_t t = 0; t < perms.size(); ++t) {
                    Rational coef = ext ? base * Rational(signs[s] * signs[t]) : base;
                    for (int k = 0; k < m; ++k) {
                        rows[k] = I[static_cast<std::size_t>(perms[s][k])];
                        cols[k] = J[static_cast<std::size_t>(perms[t][k])];
                    }
                    // product of Phi_{ab} = delta_ab tau + F_ab[-1] in slot order
                    for (unsigned mask = 0; mask < (1u << m); ++mask) {
                        Rational c = coef;
                        std::vector<int> letters;
                        bool ok = true;
                        for (int k = 0; k < m && ok; ++k) {
                            if ((mask >> k) & 1u) {
                                const auto& e = alg.entry(rows[k], cols[k]);
                                if (e.pair < 0) ok = false;
                                else {
                                    letters.push_back(e.pair);
                                    c *= e.coeff;
                                }
                            } else if (rows[k] != cols[k]) {
                                ok = false;
                            }
                        }
                        if (!ok) continue;
                        for (auto& [key, x] : patterns[mask]) {
                            Word w;
                            for (auto [label, mode] : key.first) w.push_back(alg.code(letters[static_cast<std::size_t>(label)], mode));
                            acc[{key.second, w}] += c * x;
                        }
                    }
                }
        }
    TauPoly out(static_cast<std::size_t>(m) + 1);
    for (auto& [key, c] : acc)
        if (!c.is_zero()) out[static_cast<std::size_t>(key.first)] += alg.normalize(key.second) * c;
    return out;
}

}  // namespace ffc
