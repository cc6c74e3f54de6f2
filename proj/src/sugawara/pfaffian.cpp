#include <algorithm>
#include <numeric>

#include "ffcenter/sugawara.hpp"

namespace ffc {

namespace {

int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// words of the product of single-letter combinations, in factor order
void expand_into(std::map<Word, Rational>& acc, const std::vector<const UElement*>& factors, const Rational& c) {
    std::vector<std::pair<Word, Rational>> cur{{Word(), c}};
    for (auto* f : factors) {
        std::vector<std::pair<Word, Rational>> next;
        for (auto& [w, x] : cur)
            for (auto& [l, y] : f->terms()) next.emplace_back(w + l, x * y);
        cur = std::move(next);
        if (cur.empty()) return;
    }
    for (auto& [w, x] : cur) acc[w] += x;
}

UElement normalize_all(const Algebra& alg, const std::map<Word, Rational>& acc) {
    UElement out;
    for (auto& [w, c] : acc)
        if (!c.is_zero()) out += alg.normalize(w) * c;
    return out;
}

void check_even_orthogonal(const Algebra& alg) {
    if (alg.tag() != CaseTag::orthogonal || alg.N() % 2) throw std::invalid_argument("Pfaffian needs an even orthogonal algebra");
}

}  // namespace

UElement pfaffian(const Algebra& alg) {
    check_even_orthogonal(alg);
    const int N = alg.N(), n = N / 2;
    const Form& f = alg.form();
    // Ft = F[-1] G
    std::vector<UElement> Ft(static_cast<std::size_t>(N * N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                if (!f.G[k][j].is_zero()) Ft[static_cast<std::size_t>(i * N + j)] += alg.generator(i, k, -1) * f.G[k][j];
    std::vector<int> p(static_cast<std::size_t>(N));
    std::iota(p.begin(), p.end(), 0);
    std::map<Word, Rational> acc;
    do {
        std::vector<const UElement*> factors;
        for (int k = 0; k < n; ++k) factors.push_back(&Ft[static_cast<std::size_t>(p[2 * k] * N + p[2 * k + 1])]);
        expand_into(acc, factors, Rational(perm_sign(p)));
    } while (std::next_permutation(p.begin(), p.end()));
    Rational scale = Rational(1) / (pow(Rational(2), n) * factorial(n));
    return normalize_all(alg, acc) * scale;
}

UElement pfaffian_restricted(const Algebra& alg) {
    check_even_orthogonal(alg);
    const int N = alg.N();
    std::vector<UElement> F(static_cast<std::size_t>(N * N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) F[static_cast<std::size_t>(i * N + j)] = alg.generator(i, j, -1);
    std::map<Word, Rational> acc;
    // pairings listed with increasing first elements, each pair increasing
    std::vector<int> p;
    std::vector<bool> used(static_cast<std::size_t>(N), false);
    std::function<void()> rec = [&]() {
        int first = 0;
        while (first < N && used[static_cast<std::size_t>(first)]) ++first;
        if (first == N) {
            std::vector<const UElement*> factors;
            for (std::size_t k = 0; k < p.size(); k += 2) factors.push_back(&F[static_cast<std::size_t>(p[k] * N + p[k + 1])]);
            expand_into(acc, factors, Rational(perm_sign(p)));
            return;
        }
        used[static_cast<std::size_t>(first)] = true;
        for (int j = first + 1; j < N; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            p.push_back(first);
            p.push_back(j);
            rec();
            p.pop_back();
            p.pop_back();
            used[static_cast<std::size_t>(j)] = false;
        }
        used[static_cast<std::size_t>(first)] = false;
    };
    rec();
    return normalize_all(alg, acc);
}

}  // namespace ffc
