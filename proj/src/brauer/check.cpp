#include <cstdlib>

#include "ffcenter/brauer.hpp"

namespace ffc {

namespace {

bool relations_hold(int m) {
    const RatFun om = RatFun::param('w');
    const BrauerElement one = BrauerElement::one(m);
    auto s = [m](int i) { return BrauerElement::s(m, i, i + 1); };
    auto e = [m](int i) { return BrauerElement::eps(m, i, i + 1); };
    for (int i = 0; i + 1 < m; ++i) {
        if (s(i) * s(i) != one || e(i) * e(i) != e(i) * om) return false;
        if (s(i) * e(i) != e(i) || e(i) * s(i) != e(i)) return false;
        for (int j = 0; j + 1 < m; ++j) {
            if (std::abs(i - j) <= 1) continue;
            if (s(i) * s(j) != s(j) * s(i) || e(i) * e(j) != e(j) * e(i) || s(i) * e(j) != e(j) * s(i)) return false;
        }
        if (i + 2 >= m) continue;
        if (s(i) * s(i + 1) * s(i) != s(i + 1) * s(i) * s(i + 1)) return false;
        if (e(i) * e(i + 1) * e(i) != e(i) || e(i + 1) * e(i) * e(i + 1) != e(i + 1)) return false;
        if (s(i) * e(i + 1) * e(i) != s(i + 1) * e(i) || e(i + 1) * e(i) * s(i + 1) != e(i + 1) * s(i)) return false;
    }
    return true;
}

}  // namespace

BrauerCheck brauer_check(int m) {
    BrauerCheck r;
    r.m = m;
    r.relations = relations_hold(m);
    const BrauerElement& S = symmetrizer(m, SymmetrizerFormula::JM);
    r.formulas_agree = true;
    for (auto f : {SymmetrizerFormula::FUSION, SymmetrizerFormula::ONEFACTOR, SymmetrizerFormula::EXPANSION})
        r.formulas_agree = r.formulas_agree && symmetrizer(m, f) == S;
    r.idempotent = S * S == S;
    r.absorbs = r.kills = true;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            BrauerElement sij = BrauerElement::s(m, i, j), eij = BrauerElement::eps(m, i, j);
            r.absorbs = r.absorbs && sij * S == S && S * sij == S;
            r.kills = r.kills && (eij * S).is_zero() && (S * eij).is_zero();
        }
    return r;
}

}  // namespace ffc
