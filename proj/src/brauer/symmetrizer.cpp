#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "ffcenter/brauer.hpp"

namespace ffc {

namespace {

// a*omega + b
RatFun lin(const Rational& a, const Rational& b) { return RatFun(UniPoly('w', {b, a})); }

BrauerElement jm_sum(int m, int r) {
    BrauerElement x(m);
    for (int i = 0; i < r; ++i) {
        x += BrauerElement::s(m, i, r);
        x -= BrauerElement::eps(m, i, r);
    }
    return x;
}

BrauerElement by_jm(int m) {
    BrauerElement out = BrauerElement::one(m);
    for (auto& f : jm_factors(m)) out = out * f;
    return out;
}

BrauerElement by_fusion(int m) {
    BrauerElement hooks = BrauerElement::one(m), perms = BrauerElement::one(m);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            hooks = hooks * (BrauerElement::one(m) - BrauerElement::eps(m, i - 1, j - 1) * lin(1, i + j - 3).inverse());
            perms = perms * (BrauerElement::one(m) + BrauerElement::s(m, i - 1, j - 1) * RatFun(Rational(1, j - i)));
        }
    return (hooks * perms) * RatFun(factorial(m).inverse());
}

BrauerElement by_one_factor(int m) {
    BrauerElement out = BrauerElement::one(m);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            BrauerElement f = BrauerElement::one(m) + BrauerElement::s(m, i - 1, j - 1) * RatFun(Rational(1, j - i)) -
                              BrauerElement::eps(m, i - 1, j - 1) * lin(Rational(1, 2), j - i - 1).inverse();
            out = out * f;
        }
    return out * RatFun(factorial(m).inverse());
}

// all sets of r pairwise disjoint pairs from {0..m-1}
void disjoint_pairs(int m, int r, std::vector<bool>& used, int from, std::vector<std::pair<int, int>>& cur,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    // the smallest index of each chosen pair increases along cur, so every set appears once
    for (int i = from; i < m; ++i) {
        if (used[i]) continue;
        used[i] = true;
        for (int j = i + 1; j < m; ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur.emplace_back(i, j);
            disjoint_pairs(m, r, used, i + 1, cur, out);
            cur.pop_back();
            used[j] = false;
        }
        used[i] = false;
    }
}

BrauerElement by_expansion(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    BrauerElement h(m);
    do {
        h.add(BrauerDiagram::permutation(perm), RatFun(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    h *= RatFun(factorial(m).inverse());

    BrauerElement sum(m);
    for (int r = 0; 2 * r <= m; ++r) {
        // binom(omega/2 + m - 2, r) as a polynomial in omega
        RatFun binom(1);
        for (int k = 0; k < r; ++k) binom *= lin(Rational(1, 2), m - 2 - k);
        binom *= RatFun(factorial(r).inverse());
        RatFun c = RatFun(pow(Rational(-2), -r) * factorial(r).inverse()) * binom.inverse();
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        std::vector<std::pair<int, int>> cur;
        std::vector<std::vector<std::pair<int, int>>> sets;
        disjoint_pairs(m, r, used, 0, cur, sets);
        BrauerElement part(m);
        for (auto& set : sets) {
            BrauerElement p = BrauerElement::one(m);
            for (auto [i, j] : set) p = p * BrauerElement::eps(m, i, j);
            part += p;
        }
        sum += part * c;
    }
    return h * sum;
}

struct Cache {
    std::shared_mutex mu;
    std::map<std::pair<int, int>, BrauerElement> table;
};

Cache& cache() {
    static Cache c;
    return c;
}

}  // namespace

const char* formula_name(SymmetrizerFormula f) {
    switch (f) {
        case SymmetrizerFormula::JM: return "JM";
        case SymmetrizerFormula::FUSION: return "FUSION";
        case SymmetrizerFormula::ONEFACTOR: return "ONEFACTOR";
        case SymmetrizerFormula::EXPANSION: return "EXPANSION";
    }
    return "?";
}

std::vector<BrauerElement> jm_factors(int m) {
    std::vector<BrauerElement> out;
    for (int r = 2; r <= m; ++r) {
        BrauerElement x = jm_sum(m, r - 1);
        BrauerElement a = BrauerElement::one(m) + x;
        BrauerElement b = BrauerElement::one(m) * lin(1, r - 3) + x;
        out.push_back((a * b) * lin(r, r * (2 * r - 4)).inverse());
    }
    return out;
}

const BrauerElement& symmetrizer(int m, SymmetrizerFormula formula) {
    if (m < 1 || m > kMaxStrands) throw std::invalid_argument("symmetrizer size out of range");
    auto key = std::make_pair(m, static_cast<int>(formula));
    Cache& c = cache();
    {
        std::shared_lock lock(c.mu);
        auto it = c.table.find(key);
        if (it != c.table.end()) return it->second;
    }
    BrauerElement s(m);
    switch (formula) {
        case SymmetrizerFormula::JM: s = by_jm(m); break;
        case SymmetrizerFormula::FUSION: s = by_fusion(m); break;
        case SymmetrizerFormula::ONEFACTOR: s = by_one_factor(m); break;
        case SymmetrizerFormula::EXPANSION: s = by_expansion(m); break;
    }
    std::unique_lock lock(c.mu);
    return c.table.emplace(key, std::move(s)).first->second;
}

}  // namespace ffc
