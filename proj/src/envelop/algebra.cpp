#include <algorithm>
#include <mutex>
#include <sstream>

#include "ffcenter/envelop.hpp"

namespace ffc {

UElement UElement::word(const Word& w, const Rational& c) {
    UElement x;
    x.add(w, c);
    return x;
}

Rational UElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
}

std::size_t UElement::max_length() const {
    std::size_t l = 0;
    for (auto& [w, c] : terms_) l = std::max(l, w.size());
    return l;
}

void UElement::add(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

UElement& UElement::operator+=(const UElement& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

UElement& UElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

UElement UElement::operator-() const { return *this * Rational(-1); }

std::vector<std::pair<Word, Rational>> UElement::sorted() const {
    std::vector<std::pair<Word, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
    });
    return v;
}

Rational critical_level(CaseTag tag, int N) {
    return tag == CaseTag::orthogonal ? Rational(-(N - 2)) : Rational(-(N / 2 + 1));
}

namespace {

using GlVector = std::map<std::pair<int, int>, Rational>;

// F_ij = E_ij - sum_{k,l} g_ik gbar_lj E_lk
GlVector f_vector(const Form& f, int i, int j) {
    GlVector v;
    auto add = [&v](int a, int b, const Rational& c) {
        if (c.is_zero()) return;
        Rational& x = v[{a, b}];
        x += c;
        if (x.is_zero()) v.erase({a, b});
    };
    add(i, j, 1);
    for (int k = 0; k < f.N; ++k) {
        if (f.G[i][k].is_zero()) continue;
        for (int l = 0; l < f.N; ++l)
            if (!f.Ginv[l][j].is_zero()) add(l, k, -(f.G[i][k] * f.Ginv[l][j]));
    }
    return v;
}

// ratio a = r * b, or zero if not proportional
Rational ratio(const GlVector& a, const GlVector& b) {
    if (a.size() != b.size()) return Rational();
    Rational r;
    bool first = true;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return Rational();
        Rational q = ia->second / ib->second;
        if (first) {
            r = q;
            first = false;
        } else if (q != r) {
            return Rational();
        }
    }
    return r;
}

}  // namespace

Algebra::Algebra(const Form& form, const Rational& level) : form_(form), level_(level) {
    const int N = form.N;
    entries_.resize(static_cast<std::size_t>(N * N));
    std::vector<GlVector> canon;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            GlVector v = f_vector(form, i, j);
            Entry& e = entries_[static_cast<std::size_t>(i * N + j)];
            if (v.empty()) continue;
            for (std::size_t p = 0; p < canon.size(); ++p) {
                Rational r = ratio(v, canon[p]);
                if (!r.is_zero()) {
                    e.pair = static_cast<int>(p);
                    e.coeff = r;
                    break;
                }
            }
            if (e.pair >= 0) continue;
            for (auto& [ab, c] : v)
                for (auto& cv : canon)
                    if (cv.count(ab)) throw std::logic_error("generators are not proportional to a canonical basis");
            e.pair = static_cast<int>(canon.size());
            e.coeff = 1;
            canon.push_back(std::move(v));
            pairs_.emplace_back(i, j);
        }

    // coefficient of e_ij (x) e_kl in [F[r]_1, F[s]_2] = (P-Q)F[r+s]_2 - F[r+s]_2(P-Q) + c r delta (P-Q) K
    auto pq = [&](int a, int b, int c, int d) {
        Rational v = (a == d && b == c) ? Rational(1) : Rational();
        return v - form.G[a][b] * form.Ginv[d][c];
    };
    const int P = num_pairs();
    brackets_.resize(static_cast<std::size_t>(P * P));
    for (int p = 0; p < P; ++p)
        for (int q = 0; q < P; ++q) {
            auto [i, j] = pairs_[p];
            auto [k, l] = pairs_[q];
            std::map<int, Rational> acc;
            for (int x = 0; x < N; ++x) {
                Rational c1 = pq(i, k, j, x);
                const Entry& e1 = entry(x, l);
                if (!c1.is_zero() && e1.pair >= 0) acc[e1.pair] += c1 * e1.coeff;
                Rational c2 = pq(i, x, j, l);
                const Entry& e2 = entry(k, x);
                if (!c2.is_zero() && e2.pair >= 0) acc[e2.pair] -= c2 * e2.coeff;
            }
            Bracket& b = brackets_[static_cast<std::size_t>(p * P + q)];
            for (auto& [x, c] : acc)
                if (!c.is_zero()) b.terms.emplace_back(x, c);
            b.central = pq(i, k, j, l) * Rational(central_factor());
        }
}

std::shared_ptr<const Algebra> Algebra::make(CaseTag tag, int N) { return make(tag, N, critical_level(tag, N)); }

std::shared_ptr<const Algebra> Algebra::make(CaseTag tag, int N, const Rational& level) {
    return std::make_shared<const Algebra>(build_form(tag, N), level);
}

Code Algebra::code(int pair, int mode) const {
    if (mode < -kModeOffset || mode >= kModeOffset) throw std::out_of_range("mode out of range");
    return static_cast<Code>((mode + kModeOffset) * num_pairs() + pair + 1);
}

int Algebra::code_pair(Code c) const { return (static_cast<int>(c) - 1) % num_pairs(); }

int Algebra::code_mode(Code c) const { return (static_cast<int>(c) - 1) / num_pairs() - kModeOffset; }

std::string Algebra::code_str(Code c) const {
    if (c == kCentral) return "K";
    auto [i, j] = pair(code_pair(c));
    return "F[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" + std::to_string(code_mode(c)) + "]";
}

UElement Algebra::commutator_codes(Code a, Code b) const {
    UElement out;
    if (a == kCentral || b == kCentral) return out;
    int r = code_mode(a), s = code_mode(b);
    const Bracket& br = bracket(code_pair(a), code_pair(b));
    for (auto& [x, c] : br.terms) out.add(Word(1, code(x, r + s)), c);
    if (r + s == 0 && r != 0) out.add(Word(1, kCentral), br.central * Rational(r));
    return out;
}

UElement Algebra::left_mul(Code g, const Word& w, bool vacuum) const {
    if (vacuum && g == kCentral) return UElement::word(w, level_);
    if (w.empty()) {
        if (vacuum && code_mode(g) >= 0) return UElement();
        return UElement::word(Word(1, g));
    }
    if (g <= w[0]) return UElement::word(Word(1, g) + w);
    Word key = Word(1, g) + w;
    auto& memo = memo_[vacuum ? 1 : 0];
    {
        std::shared_lock lock(memo_mu_);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Word rest = w.substr(1);
    UElement res = left_mul_element(w[0], left_mul(g, rest, vacuum), vacuum);
    if (g != kCentral) {
        int r = code_mode(g), s = code_mode(w[0]);
        const Bracket& br = bracket(code_pair(g), code_pair(w[0]));
        for (auto& [x, c] : br.terms) {
            UElement t = left_mul(code(x, r + s), rest, vacuum);
            res += t * c;
        }
        if (r + s == 0 && r != 0 && !br.central.is_zero()) {
            Rational c = br.central * Rational(r);
            if (vacuum) res += UElement::word(rest, c * level_);
            else res += left_mul(kCentral, rest, vacuum) * c;
        }
    }
    std::unique_lock lock(memo_mu_);
    memo.emplace(std::move(key), res);
    return res;
}

UElement Algebra::left_mul_element(Code g, const UElement& x, bool vacuum) const {
    UElement out;
    for (auto& [w, c] : x.terms()) {
        UElement t = left_mul(g, w, vacuum);
        if (t.size() == 1) {
            auto& [tw, tc] = *t.terms().begin();
            out.add(tw, tc * c);
        } else {
            out += t * c;
        }
    }
    return out;
}

UElement Algebra::normalize(const Word& w) const {
    UElement x(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = left_mul_element(*it, x, false);
    return x;
}

UElement Algebra::mul(const UElement& x, const UElement& y) const {
    UElement out;
    for (auto& [w, c] : x.terms()) {
        UElement t = y;
        for (auto it = w.rbegin(); it != w.rend(); ++it) t = left_mul_element(*it, t, false);
        out += t * c;
    }
    return out;
}

UElement Algebra::commutator(const UElement& x, const UElement& y) const { return mul(x, y) - mul(y, x); }

UElement Algebra::normalize_leftmost(const Word& w) const {
    std::map<Word, Rational> work{{w, Rational(1)}};
    UElement out;
    while (!work.empty()) {
        auto node = work.begin();
        Word u = node->first;
        Rational c = node->second;
        work.erase(node);
        if (c.is_zero()) continue;
        std::size_t i = 0;
        while (i + 1 < u.size() && u[i] <= u[i + 1]) ++i;
        if (i + 1 >= u.size()) {
            out.add(u, c);
            continue;
        }
        Word swapped = u;
        std::swap(swapped[i], swapped[i + 1]);
        work[swapped] += c;
        UElement br = commutator_codes(u[i], u[i + 1]);
        for (auto& [x, k] : br.terms()) {
            Word v = u.substr(0, i) + x + u.substr(i + 2);
            work[v] += c * k;
        }
    }
    return out;
}

UElement Algebra::vacuum_apply_word(const Word& x, const UElement& v) const {
    UElement t = v;
    for (auto it = x.rbegin(); it != x.rend(); ++it) t = left_mul_element(*it, t, true);
    return t;
}

UElement Algebra::vacuum_apply(const UElement& x, const UElement& v) const {
    UElement out;
    for (auto& [w, c] : x.terms()) out += vacuum_apply_word(w, v) * c;
    return out;
}

UElement Algebra::tau_bracket(const UElement& x) const {
    UElement out;
    for (auto& [w, c] : x.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == kCentral) continue;
            int r = code_mode(w[i]);
            if (r == 0) continue;
            Word v = w;
            v[i] = code(code_pair(w[i]), r - 1);
            out += normalize(v) * (c * Rational(-r));
        }
    }
    return out;
}

UElement Algebra::generator(int i, int j, int mode) const {
    const Entry& e = entry(i, j);
    if (e.pair < 0) return UElement();
    return UElement::word(Word(1, code(e.pair, mode)), e.coeff);
}

CommPoly Algebra::symbol(const UElement& x) {
    std::size_t top = x.max_length();
    CommPoly out;
    for (auto& [w, c] : x.terms()) {
        if (w.size() != top) continue;
        CommPoly::Monomial m;
        for (Code l : w) m = CommPoly::mul(m, {{static_cast<int>(l), 1}});
        out.add(m, c);
    }
    return out;
}

std::vector<std::string> Algebra::word_strings(const Word& w) const {
    std::vector<std::string> out;
    for (Code c : w) out.push_back(code_str(c));
    return out;
}

std::string Algebra::str(const UElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : x.sorted()) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (Code l : w) os << " " << code_str(l);
    }
    return os.str();
}

std::map<std::pair<LetterSeq, int>, Rational> tau_expand(const std::vector<TauFactor>& factors) {
    std::map<std::pair<LetterSeq, int>, Rational> state{{{LetterSeq(), 0}, Rational(1)}};
    for (auto f = factors.rbegin(); f != factors.rend(); ++f) {
        std::map<std::pair<LetterSeq, int>, Rational> next;
        for (auto& [key, c] : state) {
            const auto& [seq, k] = key;
            if (!f->is_tau) {
                LetterSeq s;
                s.reserve(seq.size() + 1);
                s.emplace_back(f->label, f->mode);
                s.insert(s.end(), seq.begin(), seq.end());
                next[{s, k}] += c;
                continue;
            }
            next[{seq, k + 1}] += c;
            // [tau, F[r]] = -r F[r-1]
            for (std::size_t i = 0; i < seq.size(); ++i) {
                int r = seq[i].second;
                if (r == 0) continue;
                LetterSeq s = seq;
                s[i].second = r - 1;
                next[{s, k}] += c * Rational(-r);
            }
        }
        state.clear();
        for (auto& [key, c] : next)
            if (!c.is_zero()) state.emplace(key, c);
    }
    return state;
}

TauPoly tau_order(const Algebra& alg, const std::vector<TauFactor>& factors) {
    TauPoly out;
    for (auto& [key, c] : tau_expand(factors)) {
        const auto& [seq, k] = key;
        Word w;
        for (auto [p, r] : seq) w.push_back(alg.code(p, r));
        if (static_cast<int>(out.size()) <= k) out.resize(static_cast<std::size_t>(k) + 1);
        out[static_cast<std::size_t>(k)] += alg.normalize(w) * c;
    }
    return out;
}

}  // namespace ffc
