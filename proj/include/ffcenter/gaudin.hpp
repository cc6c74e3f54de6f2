#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffcenter/envelop.hpp"
#include "ffcenter/sugawara.hpp"
#include "ffcenter/tensorrep.hpp"

namespace ffc {

struct NotARepresentation : std::invalid_argument {
    NotARepresentation() : std::invalid_argument("matrices do not satisfy the bracket table") {}
};
struct CoincidentPoints : std::invalid_argument {
    CoincidentPoints() : std::invalid_argument("evaluation points must be distinct") {}
};
struct OutOfRange : std::out_of_range {
    OutOfRange() : std::out_of_range("m outside the admissible range") {}
};

// throws std::invalid_argument unless B + B' = 0
void check_b_matrix(const Form& f, const Matrix& B);
// diag(b_1..b_n, [0], -b_n..-b_1)
Matrix diagonal_b(const Form& f, const std::vector<Rational>& b);

// Slot kinds in tr S X_1 ... X_m: the identity (for d/dz), -B, or -M_p for an F-slot.
enum class SlotKind { deriv, constant, letter };

// scalar weights over the pair tuples of the letter slots, including the symplectic 1/(n-m+1)
PairWeights slot_weights(const Algebra& alg, const Matrix& B, const std::vector<SlotKind>& kinds);

// l[i][e] is the z^{-e} coefficient of l_{mi}(z), e = 0..order
struct GtCoefficients {
    int m = 0;
    int order = 0;
    std::vector<std::vector<UElement>> l;
};

// tr S L_1(z)...L_m(z) for L(z) = d/dz - B - F(z)_-; letter modes up to max_mode
GtCoefficients gt_generators(const Algebra& alg, int m, const Matrix& B, int order, int max_mode = -1);

struct EvalModule {
    std::vector<Matrix> rep;  // image of each canonical F_p
    Rational point;
};

std::vector<Matrix> vector_representation(const Algebra& alg);
EvalModule evaluation_module(const Algebra& alg, const std::vector<Matrix>& rep, const Rational& a);

// l_{mi}(z) on the tensor product of evaluation modules with F(z)_- -> sum_s F^(s)/(z - a_s)
class GaudinFamily {
public:
    GaudinFamily(const Algebra& alg, const std::vector<EvalModule>& modules, const Matrix& B, int m);

    int m() const { return m_; }
    std::size_t dim() const { return dim_; }
    Matrix at(int i, const Rational& z) const;
    // z^{-e} coefficient of the expansion at z = infinity
    Matrix series_coefficient(int i, int e) const;

private:
    struct Key {
        int k;
        std::vector<int> powers;  // exponent of 1/(z - a_s) per site
        bool operator<(const Key& o) const { return k != o.k ? k < o.k : powers < o.powers; }
    };
    int m_;
    std::size_t dim_;
    std::vector<Rational> points_;
    std::map<Key, Matrix> terms_;
};

// evaluation of an element of U(g[t]) on the tensor product: F_p[r] -> sum_s a_s^r F_p^(s)
Matrix evaluate_on_modules(const Algebra& alg, const std::vector<EvalModule>& modules, const UElement& x);

struct NamedElement {
    std::string name;
    UElement value;
};

// p^(0..n) in Pf(BG + F G z^{-1}), F = F[0]
std::vector<UElement> pfaffian_expansion(const Algebra& alg, const Matrix& B);

// coefficients l^(s)_{2k,2k} for L(z) = d/dz - B - F/z, plus p^(r) in type D
std::vector<NamedElement> shift_of_argument(const Algebra& alg, const Matrix& B);

}  // namespace ffc
