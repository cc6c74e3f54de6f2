#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "ffcenter/tensorrep.hpp"

namespace ffc {

const char* case_name(CaseTag c) { return c == CaseTag::orthogonal ? "orthogonal" : "symplectic"; }

Matrix zero_matrix(int n) { return Matrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))); }

Matrix identity_matrix(int n) {
    Matrix m = zero_matrix(n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    Matrix c = zero_matrix(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t = zero_matrix(static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
    return t;
}

int matrix_rank(Matrix a) {
    int rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
        auto& pr = a[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < a.size(); ++r) {
            if (a[r][c].is_zero()) continue;
            Rational f = a[r][c] / pr[c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * pr[k];
        }
        ++rank;
    }
    return rank;
}

Matrix Form::prime_of(const Matrix& a) const { return matmul(matmul(G, transpose(a)), Ginv); }

Form build_form(CaseTag tag, int N) {
    if (N < 2) throw std::invalid_argument("dimension must be at least 2");
    if (tag == CaseTag::symplectic && N % 2) throw OddSymplecticDimension();
    Form f;
    f.tag = tag;
    f.N = N;
    f.G = zero_matrix(N);
    for (int i = 0; i < N; ++i) f.G[i][f.prime(i)] = f.eps(i);
    // G^2 = +1 (orthogonal) or -1 (symplectic)
    f.Ginv = f.G;
    if (tag == CaseTag::symplectic)
        for (auto& row : f.Ginv)
            for (auto& x : row) x = -x;
    return f;
}

Form identity_form(int N) {
    if (N < 2) throw std::invalid_argument("dimension must be at least 2");
    Form f;
    f.tag = CaseTag::orthogonal;
    f.N = N;
    f.G = identity_matrix(N);
    f.Ginv = identity_matrix(N);
    f.antidiagonal = false;
    return f;
}

TensorOp TensorOp::identity(int m, int N) {
    TensorOp t(m, N);
    for (Index i = 0; i < t.dim(); ++i) t.e_.emplace(std::make_pair(i, i), Rational(1));
    return t;
}

TensorOp::Index TensorOp::dim() const {
    Index d = 1;
    for (int k = 0; k < m_; ++k) d *= static_cast<Index>(N_);
    return d;
}

Rational TensorOp::at(Index row, Index col) const {
    auto it = e_.find({row, col});
    return it == e_.end() ? Rational() : it->second;
}

void TensorOp::add(Index row, Index col, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = e_.emplace(std::make_pair(row, col), v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
}

TensorOp::Index TensorOp::encode(const std::vector<int>& a) const {
    Index x = 0;
    for (int v : a) x = x * static_cast<Index>(N_) + static_cast<Index>(v);
    return x;
}

std::vector<int> TensorOp::decode(Index idx) const {
    std::vector<int> a(static_cast<std::size_t>(m_));
    for (int k = m_ - 1; k >= 0; --k) {
        a[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<Index>(N_));
        idx /= static_cast<Index>(N_);
    }
    return a;
}

TensorOp& TensorOp::operator+=(const TensorOp& o) {
    if (o.m_ != m_ || o.N_ != N_) throw RingMismatch();
    for (auto& [k, v] : o.e_) add(k.first, k.second, v);
    return *this;
}

TensorOp& TensorOp::operator-=(const TensorOp& o) {
    if (o.m_ != m_ || o.N_ != N_) throw RingMismatch();
    for (auto& [k, v] : o.e_) add(k.first, k.second, -v);
    return *this;
}

TensorOp& TensorOp::operator*=(const Rational& c) {
    if (c.is_zero()) e_.clear();
    for (auto& [k, v] : e_) v *= c;
    return *this;
}

TensorOp operator*(const TensorOp& a, const TensorOp& b) {
    if (a.m_ != b.m_ || a.N_ != b.N_) throw RingMismatch();
    std::map<TensorOp::Index, std::vector<std::pair<TensorOp::Index, const Rational*>>> rows;
    for (auto& [k, v] : b.e_) rows[k.first].emplace_back(k.second, &v);
    TensorOp c(a.m_, a.N_);
    for (auto& [k, v] : a.e_) {
        auto it = rows.find(k.second);
        if (it == rows.end()) continue;
        for (auto& [col, w] : it->second) c.add(k.first, col, v * *w);
    }
    return c;
}

Rational TensorOp::trace() const {
    Rational t;
    for (auto& [k, v] : e_)
        if (k.first == k.second) t += v;
    return t;
}

int TensorOp::rank() const {
    // sparse Gaussian elimination on rows
    std::map<Index, std::map<Index, Rational>> rows;
    for (auto& [k, v] : e_) rows[k.first][k.second] = v;
    std::vector<std::map<Index, Rational>> pivots;
    std::map<Index, std::size_t> pivot_of;
    for (auto& [r, row] : rows) {
        std::map<Index, Rational> v = row;
        for (;;) {
            if (v.empty()) break;
            auto lead = v.begin();
            auto p = pivot_of.find(lead->first);
            if (p == pivot_of.end()) {
                pivot_of[lead->first] = pivots.size();
                pivots.push_back(std::move(v));
                break;
            }
            const auto& pr = pivots[p->second];
            Rational f = lead->second / pr.begin()->second;
            for (auto& [c, x] : pr) {
                Rational nv = v[c] - f * x;
                if (nv.is_zero()) v.erase(c);
                else v[c] = nv;
            }
        }
    }
    return static_cast<int>(pivots.size());
}

TensorOp TensorOp::permuted(const std::vector<int>& perm) const {
    TensorOp t(m_, N_);
    for (auto& [k, v] : e_) {
        auto a = decode(k.first), b = decode(k.second);
        std::vector<int> pa(a.size()), pb(b.size());
        for (std::size_t s = 0; s < a.size(); ++s) {
            pa[s] = a[static_cast<std::size_t>(perm[s])];
            pb[s] = b[static_cast<std::size_t>(perm[s])];
        }
        t.add(encode(pa), encode(pb), v);
    }
    return t;
}

std::pair<TensorOp, TensorOp> pq_ops(int i, int j, int m, const Form& form) {
    if (i < 0 || j <= i || j >= m) throw BadSlots();
    TensorOp P(m, form.N), Q(m, form.N);
    TensorOp id = TensorOp::identity(m, form.N);
    for (auto& [k, v] : id.entries()) {
        auto a = P.decode(k.first);
        auto b = a;
        std::swap(b[i], b[j]);
        P.add(k.first, P.encode(b), 1);
    }
    // Q_{(ab),(cd)} = g_{ab} gbar_{dc} in slots i, j
    for (TensorOp::Index row = 0; row < Q.dim(); ++row) {
        auto a = Q.decode(row);
        const Rational& g = form.G[a[i]][a[j]];
        if (g.is_zero()) continue;
        for (int c = 0; c < form.N; ++c)
            for (int d = 0; d < form.N; ++d) {
                const Rational& gb = form.Ginv[d][c];
                if (gb.is_zero()) continue;
                auto b = a;
                b[i] = c;
                b[j] = d;
                Q.add(row, Q.encode(b), g * gb);
            }
    }
    return {P, Q};
}

namespace {

int perm_sign(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

struct PairKind {
    enum { vertical, top, bottom } kind;
    int x, y;  // strand numbers; for vertical x = top strand, y = bottom strand
};

}  // namespace

TensorOp act_diagram(const BrauerDiagram& d, const Form& form) {
    const int m = d.m, N = form.N;
    std::vector<PairKind> pairs;
    std::vector<std::pair<int, int>> tops, bottoms, verts;
    for (auto [a, b] : d.pairs()) {
        if (a < m && b < m) tops.emplace_back(a, b);
        else if (a >= m && b >= m) bottoms.emplace_back(a - m, b - m);
        else verts.emplace_back(a, b - m);
    }
    int sign = 1;
    if (form.tag == CaseTag::symplectic) {
        // A sends the hook strands and then the vertical strands to 0..m-1; Bp sends 0..m-1 to bottom strands
        const int k = static_cast<int>(tops.size());
        std::vector<int> A(static_cast<std::size_t>(m)), Bp(static_cast<std::size_t>(m));
        for (int h = 0; h < k; ++h) {
            A[tops[h].first] = 2 * h;
            A[tops[h].second] = 2 * h + 1;
            Bp[2 * h] = bottoms[h].first;
            Bp[2 * h + 1] = bottoms[h].second;
        }
        for (std::size_t i = 0; i < verts.size(); ++i) {
            A[verts[i].first] = 2 * k + static_cast<int>(i);
            Bp[2 * k + static_cast<int>(i)] = verts[i].second;
        }
        sign = perm_sign(A) * perm_sign(Bp) * (k % 2 ? -1 : 1);
    }
    std::vector<std::tuple<int, int, Rational>> gnz, gbnz;
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) {
            if (!form.G[p][q].is_zero()) gnz.emplace_back(p, q, form.G[p][q]);
            if (!form.Ginv[p][q].is_zero()) gbnz.emplace_back(p, q, form.Ginv[p][q]);
        }
    TensorOp out(m, N);
    std::vector<int> a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(m));
    const std::size_t nt = tops.size(), nb = bottoms.size(), nv = verts.size();
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t step, Rational c) {
        if (step < nt) {
            auto [x, y] = tops[step];
            for (auto& [p, q, g] : gnz) {
                a[x] = p;
                a[y] = q;
                rec(step + 1, c * g);
            }
        } else if (step < nt + nb) {
            // bottom hook v < w carries gbar_{b_w b_v}
            auto [v, w] = bottoms[step - nt];
            for (auto& [p, q, g] : gbnz) {
                b[w] = p;
                b[v] = q;
                rec(step + 1, c * g);
            }
        } else if (step < nt + nb + nv) {
            auto [t, u] = verts[step - nt - nb];
            for (int p = 0; p < N; ++p) {
                a[t] = p;
                b[u] = p;
                rec(step + 1, c);
            }
        } else {
            out.add(out.encode(a), out.encode(b), c);
        }
    };
    rec(0, Rational(sign));
    return out;
}

TensorOp act_brauer(const BrauerElement& x, const Form& form) {
    TensorOp out(x.m(), form.N);
    Rational w = form.omega();
    for (auto& [d, c] : x.terms()) {
        Rational v;
        try {
            v = c.eval(w);
        } catch (const Pole&) {
            throw PoleAtSpecialization("coefficient " + c.str() + " has a pole at omega = " + w.str());
        }
        if (v.is_zero()) continue;
        out += act_diagram(d, form) * v;
    }
    return out;
}

namespace {

struct ImageCache {
    std::shared_mutex mu;
    std::map<std::tuple<int, int, int, bool>, TensorOp> table;
};

ImageCache& image_cache() {
    static ImageCache c;
    return c;
}

}  // namespace

const TensorOp& symmetrizer_image(const Form& form, int m) {
    auto key = std::make_tuple(static_cast<int>(form.tag), form.N, m, form.antidiagonal);
    ImageCache& c = image_cache();
    {
        std::shared_lock lock(c.mu);
        auto it = c.table.find(key);
        if (it != c.table.end()) return it->second;
    }
    TensorOp img = act_brauer(symmetrizer(m), form);
    std::unique_lock lock(c.mu);
    return c.table.emplace(key, std::move(img)).first->second;
}

TensorOp partial_trace(const TensorOp& op, int slot) {
    if (slot < 0 || slot >= op.m() || op.m() < 2) throw BadSlots();
    TensorOp out(op.m() - 1, op.N());
    for (auto& [k, v] : op.entries()) {
        auto a = op.decode(k.first), b = op.decode(k.second);
        if (a[slot] != b[slot]) continue;
        a.erase(a.begin() + slot);
        b.erase(b.begin() + slot);
        out.add(out.encode(a), out.encode(b), v);
    }
    return out;
}

TensorOp trace_tail(const TensorOp& op, int keep) {
    if (keep < 0 || keep > op.m()) throw BadSlots();
    if (keep == op.m()) return op;
    TensorOp::Index tail = 1;
    for (int k = keep; k < op.m(); ++k) tail *= static_cast<TensorOp::Index>(op.N());
    TensorOp out(keep == 0 ? 1 : keep, op.N());
    if (keep == 0) {
        out = TensorOp(1, 1);
        out.add(0, 0, op.trace());
        return out;
    }
    for (auto& [k, v] : op.entries()) {
        if (k.first % tail != k.second % tail) continue;
        out.add(k.first / tail, k.second / tail, v);
    }
    return out;
}

CommPoly hc_leading(CaseTag tag, int N, int m) {
    Form form = build_form(tag, N);
    const int n = N / 2;
    if (tag == CaseTag::symplectic && m > n) throw OutOfDirectRange();
    // h variable for each diagonal position: +h_i, 0 or -h_i
    std::vector<std::pair<int, int>> x(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        if (i < n) x[i] = {i, 1};
        else if (N % 2 && i == n) x[i] = {-1, 0};
        else x[i] = {form.prime(i), -1};
    }
    const TensorOp& S = symmetrizer_image(form, m);
    CommPoly out;
    for (auto& [k, v] : S.entries()) {
        if (k.first != k.second) continue;
        auto a = S.decode(k.first);
        Rational c = v;
        CommPoly::Monomial mono;
        bool zero = false;
        for (int ai : a) {
            if (x[ai].first < 0) {
                zero = true;
                break;
            }
            if (x[ai].second < 0) c = -c;
            mono = CommPoly::mul(mono, {{x[ai].first, 1}});
        }
        if (!zero) out.add(mono, c);
    }
    return out.halved_exponents();
}

}  // namespace ffc
