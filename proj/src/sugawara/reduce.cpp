#include "ffcenter/sugawara.hpp"

namespace ffc {

namespace {

Rational mat_trace(const Matrix& m) {
    Rational t;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

int pick_slot(const std::vector<TaggedSlot>& slots, PeelOrder order) {
    const int m = static_cast<int>(slots.size());
    if (order == PeelOrder::identity_then_last) {
        for (int j = 0; j < m; ++j)
            if (slots[static_cast<std::size_t>(j)].tag == SlotTag::identity) return j;
        for (int j = m - 1; j >= 0; --j)
            if (slots[static_cast<std::size_t>(j)].tag == SlotTag::skew) return j;
        return -1;
    }
    for (int j = 0; j < m; ++j)
        if (slots[static_cast<std::size_t>(j)].tag == SlotTag::skew) return j;
    for (int j = 0; j < m; ++j)
        if (slots[static_cast<std::size_t>(j)].tag == SlotTag::identity) return j;
    return -1;
}

// V(slots) = (1/(nu-m+1)) tr S^(m) slots
RatFun reduce(const std::vector<TaggedSlot>& slots, int n, PeelOrder order) {
    const int m = static_cast<int>(slots.size());
    const RatFun nu = RatFun::param('v');
    if (m == 1) return RatFun(mat_trace(slots[0].M)) / nu;
    int j = pick_slot(slots, order);
    if (j < 0) {
        if (m > n) throw NoPeelableSlot();
        std::vector<RingMatrix<Rational>> mats;
        for (auto& s : slots) mats.push_back(s.M);
        const TensorOp& S = symmetrizer_image(build_form(CaseTag::symplectic, 2 * n), m);
        return RatFun(trace_product(S, mats) / Rational(n - m + 1));
    }
    std::vector<TaggedSlot> rest;
    for (int i = 0; i < m; ++i)
        if (i != j) rest.push_back(slots[static_cast<std::size_t>(i)]);
    const TaggedSlot& c = slots[static_cast<std::size_t>(j)];
    if (c.tag == SlotTag::identity) return reduce(rest, n, order) * ((nu * RatFun(2) + RatFun(3 - m)) / RatFun(m));
    RatFun sum;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        std::vector<TaggedSlot> next = rest;
        next[i].M = matmul(rest[i].M, c.M);
        next[i].tag = rest[i].tag == SlotTag::identity ? SlotTag::skew : SlotTag::product;
        sum += reduce(next, n, order);
    }
    return sum * RatFun(Rational(-1, m));
}

}  // namespace

RatFun reduce_trace_symbolic(const TaggedScalarWord& w, PeelOrder order) {
    if (w.slots.empty()) throw std::invalid_argument("empty word");
    return reduce(w.slots, w.n, order);
}

Rational reduce_trace_symplectic(const TaggedScalarWord& w, PeelOrder order) {
    RatFun f = reduce_trace_symbolic(w, order);
    try {
        return f.eval(Rational(w.n));
    } catch (const Pole&) {
        throw NotRegular();
    }
}

CommPoly hc_leading_extended(int n, int m) {
    // multilinear in the slots: X = sum_i h_i X_i
    std::vector<Matrix> X;
    for (int i = 0; i < n; ++i) {
        Matrix d = zero_matrix(2 * n);
        d[i][i] = 1;
        d[2 * n - 1 - i][2 * n - 1 - i] = -1;
        X.push_back(d);
    }
    CommPoly out;
    std::vector<int> tuple(static_cast<std::size_t>(m), 0);
    while (true) {
        TaggedScalarWord w{n, {}};
        for (int i : tuple) w.slots.push_back({X[static_cast<std::size_t>(i)], SlotTag::skew});
        Rational v = reduce_trace_symplectic(w);
        if (!v.is_zero()) {
            // number of distinct orderings of the multiset
            Rational count = factorial(m);
            CommPoly::Monomial mono;
            for (std::size_t k = 0; k < tuple.size();) {
                std::size_t e = k;
                while (e < tuple.size() && tuple[e] == tuple[k]) ++e;
                count /= factorial(static_cast<int>(e - k));
                mono.emplace_back(tuple[k], static_cast<int>(e - k));
                k = e;
            }
            out.add(mono, v * count);
        }
        int i = m - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - 1) --i;
        if (i < 0) break;
        int next = tuple[static_cast<std::size_t>(i)] + 1;
        for (int k = i; k < m; ++k) tuple[static_cast<std::size_t>(k)] = next;
    }
    return out.halved_exponents();
}

}  // namespace ffc
