#include <algorithm>

#include "ffcenter/sugawara.hpp"

namespace ffc {

std::vector<Matrix> generator_matrices(const Algebra& alg) {
    std::vector<Matrix> out(static_cast<std::size_t>(alg.num_pairs()), zero_matrix(alg.N()));
    for (int i = 0; i < alg.N(); ++i)
        for (int j = 0; j < alg.N(); ++j) {
            const auto& e = alg.entry(i, j);
            if (e.pair >= 0) out[static_cast<std::size_t>(e.pair)][i][j] = e.coeff;
        }
    return out;
}

TauPoly assemble_phi(const Algebra& alg, int m, const std::function<PairWeights(int)>& weights) {
    TauPoly out(static_cast<std::size_t>(m) + 1);
    for (int s = 0; s <= m; ++s) {
        // letter modes and tau degree, summed over the choices of s F-slots
        std::map<std::pair<std::vector<int>, int>, Rational> agg;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (__builtin_popcount(mask) != s) continue;
            std::vector<TauFactor> factors;
            int label = 0;
            for (int t = 0; t < m; ++t) {
                if (mask & (1u << t)) factors.push_back({false, label++, -1});
                else factors.push_back({true, 0, 0});
            }
            for (auto& [key, c] : tau_expand(factors)) {
                std::vector<int> modes;
                for (auto& l : key.first) modes.push_back(l.second);
                agg[{modes, key.second}] += c;
            }
        }
        bool any = false;
        for (auto& [key, c] : agg) any = any || !c.is_zero();
        if (!any) continue;
        PairWeights w = weights(s);
        for (auto& [key, c] : agg) {
            if (c.is_zero()) continue;
            const auto& [modes, k] = key;
            UElement e;
            for (auto& [tuple, wt] : w) {
                Word word;
                for (int i = 0; i < s; ++i) word.push_back(alg.code(tuple[static_cast<std::size_t>(i)], modes[static_cast<std::size_t>(i)]));
                e += alg.normalize(word) * wt;
            }
            out[static_cast<std::size_t>(k)] += e * c;
        }
    }
    return out;
}

namespace {

// weights of tr W F_{b_1 a_1} ... F_{b_s a_s} for W = partial trace of S down to s slots
PairWeights trace_weights(const Algebra& alg, const TensorOp& S, int s, const Rational& scale) {
    PairWeights out;
    if (s == 0) {
        Rational t = S.trace() * scale;
        if (!t.is_zero()) out[{}] = t;
        return out;
    }
    TensorOp W = s == S.m() ? S : trace_tail(S, s);
    for (auto& [rc, v] : W.entries()) {
        auto a = W.decode(rc.first), b = W.decode(rc.second);
        std::vector<int> tuple(static_cast<std::size_t>(s));
        Rational c = v * scale;
        bool zero = false;
        for (int k = 0; k < s && !zero; ++k) {
            const auto& e = alg.entry(b[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(k)]);
            if (e.pair < 0) zero = true;
            else {
                tuple[static_cast<std::size_t>(k)] = e.pair;
                c *= e.coeff;
            }
        }
        if (!zero) out[tuple] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TauPoly phi_orthogonal(const Algebra& alg, int m) {
    if (alg.tag() != CaseTag::orthogonal) throw std::invalid_argument("orthogonal algebra expected");
    const TensorOp& S = symmetrizer_image(alg.form(), m);
    return assemble_phi(alg, m, [&](int s) { return trace_weights(alg, S, s, Rational(1)); });
}

TauPoly phi_symplectic_direct(const Algebra& alg, int m) {
    if (alg.tag() != CaseTag::symplectic) throw std::invalid_argument("symplectic algebra expected");
    const int n = alg.form().n();
    if (m > n) throw OutOfDirectRange();
    const TensorOp& S = symmetrizer_image(alg.form(), m);
    Rational scale = Rational(1, n - m + 1);
    return assemble_phi(alg, m, [&](int s) { return trace_weights(alg, S, s, scale); });
}

TauPoly phi_symplectic_extended(const Algebra& alg, int m) {
    if (alg.tag() != CaseTag::symplectic || !alg.form().antidiagonal) throw std::invalid_argument("antidiagonal symplectic algebra expected");
    const int n = alg.form().n();
    if (m < 1 || m > 2 * n) throw std::out_of_range("m must lie in 1..2n");
    auto mats = generator_matrices(alg);
    const int P = alg.num_pairs();
    auto weights = [&](int s) {
        PairWeights out;
        // the scalar weight is symmetric in the slots, so sorted tuples suffice
        std::vector<int> tuple(static_cast<std::size_t>(s), 0);
        while (true) {
            TaggedScalarWord w{n, {}};
            for (int p : tuple) w.slots.push_back({mats[static_cast<std::size_t>(p)], SlotTag::skew});
            for (int k = s; k < m; ++k) w.slots.push_back({identity_matrix(2 * n), SlotTag::identity});
            Rational v = reduce_trace_symplectic(w);
            if (!v.is_zero()) {
                std::vector<int> perm = tuple;
                do out[perm] = v;
                while (std::next_permutation(perm.begin(), perm.end()));
            }
            int i = s - 1;
            while (i >= 0 && tuple[static_cast<std::size_t>(i)] == P - 1) --i;
            if (i < 0) break;
            int next = tuple[static_cast<std::size_t>(i)] + 1;
            for (int k = i; k < s; ++k) tuple[static_cast<std::size_t>(k)] = next;
        }
        return out;
    };
    return assemble_phi(alg, m, weights);
}

TauPoly phi(const Algebra& alg, int m) {
    if (alg.tag() == CaseTag::orthogonal) return phi_orthogonal(alg, m);
    if (m <= alg.form().n()) return phi_symplectic_direct(alg, m);
    return phi_symplectic_extended(alg, m);
}

SSReport verify_ss(const Algebra& alg, const UElement& vec, const std::string& id) {
    SSReport rep;
    rep.id = id;
    for (int p = 0; p < alg.num_pairs(); ++p)
        for (int s = 0; s <= 1; ++s) {
            UElement r = alg.vacuum_apply(UElement::word(Word(1, alg.code(p, s))), vec);
            if (!r.is_zero()) rep.pass = false;
            rep.probes.push_back({p, s, std::move(r)});
        }
    return rep;
}

int jacobian_rank(const std::vector<CommPoly>& polys, const std::map<int, Rational>& point) {
    std::vector<int> vars;
    for (auto& f : polys)
        for (auto& [mono, c] : f.terms())
            for (auto& [v, e] : mono) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Matrix J;
    for (auto& f : polys) {
        std::vector<Rational> row;
        for (int v : vars) row.push_back(f.derivative(v).eval(point));
        J.push_back(std::move(row));
    }
    return matrix_rank(J);
}

}  // namespace ffc
