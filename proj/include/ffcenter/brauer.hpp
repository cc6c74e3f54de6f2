#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffcenter/exact.hpp"

namespace ffc {

struct SizeMismatch : std::invalid_argument {
    SizeMismatch() : std::invalid_argument("Brauer elements of different size") {}
};

inline constexpr int kMaxStrands = 8;

// Perfect matching on 2m endpoints. Endpoint e < m is top strand e, endpoint m+e is bottom strand e
// (0-based). partner[e] is the endpoint joined to e; the array is zero past 2m, so equality of
// diagrams is equality of arrays.
struct BrauerDiagram {
    std::uint8_t m = 0;
    std::array<std::uint8_t, 2 * kMaxStrands> partner{};

    static BrauerDiagram identity(int m);
    // transposition of strands i and j, 0-based
    static BrauerDiagram s(int m, int i, int j);
    // hook on strands i and j at top and bottom, 0-based
    static BrauerDiagram eps(int m, int i, int j);
    // top strand i joined to bottom strand perm[i]
    static BrauerDiagram permutation(const std::vector<int>& perm);
    static BrauerDiagram from_pairs(int m, const std::vector<std::pair<int, int>>& pairs);

    bool is_permutation() const;
    int hooks() const;
    std::vector<std::pair<int, int>> pairs() const;
    // 1-based endpoints 1..2m with bottom strand i at m+i, e.g. "(1 4)(2 3)"
    std::string str() const;

    friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) { return a.m == b.m && a.partner == b.partner; }
    friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.m != b.m ? a.m < b.m : a.partner < b.partner;
    }
};

struct Composite {
    BrauerDiagram diagram;
    int loops = 0;
};

// d1 stacked on top of d2: bottom row of d1 glued to the top row of d2.
Composite compose(const BrauerDiagram& d1, const BrauerDiagram& d2);

class BrauerElement {
public:
    using Terms = std::map<BrauerDiagram, RatFun>;

    explicit BrauerElement(int m = 1) : m_(m) {}
    BrauerElement(const BrauerDiagram& d, const RatFun& c = RatFun(1));
    static BrauerElement one(int m) { return BrauerElement(BrauerDiagram::identity(m)); }
    static BrauerElement s(int m, int i, int j) { return BrauerElement(BrauerDiagram::s(m, i, j)); }
    static BrauerElement eps(int m, int i, int j) { return BrauerElement(BrauerDiagram::eps(m, i, j)); }

    int m() const { return m_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    RatFun coeff(const BrauerDiagram& d) const;

    void add(const BrauerDiagram& d, const RatFun& c);
    BrauerElement& operator+=(const BrauerElement& o);
    BrauerElement& operator-=(const BrauerElement& o);
    BrauerElement& operator*=(const RatFun& c);
    friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
    friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) { return a -= b; }
    friend BrauerElement operator*(BrauerElement a, const RatFun& c) { return a *= c; }
    friend BrauerElement operator*(const RatFun& c, BrauerElement a) { return a *= c; }
    friend BrauerElement operator*(const BrauerElement& x, const BrauerElement& y);
    friend bool operator==(const BrauerElement& a, const BrauerElement& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }
    friend bool operator!=(const BrauerElement& a, const BrauerElement& b) { return !(a == b); }

    std::string str() const;

private:
    int m_;
    Terms terms_;
};

BrauerElement mul(const BrauerElement& x, const BrauerElement& y);

enum class SymmetrizerFormula { JM, FUSION, ONEFACTOR, EXPANSION };

const char* formula_name(SymmetrizerFormula f);

// the m-1 bracketed factors of the Jucys-Murphy product, r = 2..m
std::vector<BrauerElement> jm_factors(int m);

// memoized
const BrauerElement& symmetrizer(int m, SymmetrizerFormula formula = SymmetrizerFormula::JM);

struct BrauerCheck {
    int m = 0;
    bool relations = false;       // defining relations among s_i, e_i
    bool formulas_agree = false;  // all four symmetrizer formulas
    bool idempotent = false;
    bool absorbs = false;         // s_ij S = S s_ij = S
    bool kills = false;           // e_ij S = S e_ij = 0
    bool pass() const { return relations && formulas_agree && idempotent && absorbs && kills; }
};
BrauerCheck brauer_check(int m);

}  // namespace ffc
