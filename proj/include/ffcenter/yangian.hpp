#pragma once

#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ffcenter/envelop.hpp"
#include "ffcenter/gaudin.hpp"
#include "ffcenter/tensorrep.hpp"

namespace ffc {

struct BadTwist : std::invalid_argument {
    BadTwist() : std::invalid_argument("C C' must be the identity") {}
};

// R(u) = 1 - P/u + Q/(u - kappa) on C^N (x) C^N
struct RMatrix {
    CaseTag tag = CaseTag::orthogonal;
    int N = 0;
    Rational kappa;
    TensorOp P, Q;

    // dense N^2 x N^2 value at a point; throws PoleAtSpecialization at u = 0 or u = kappa
    Matrix at(const Rational& u) const;
};

RMatrix rmatrix(CaseTag tag, int N);

// Free symbols t^(r)_{ij}, r >= 1, 0-based i, j. Elements of the free algebra reuse UElement.
struct TSymbol {
    int r = 0;
    int i = 0;
    int j = 0;
};
Code t_code(int N, int r, int i, int j);
TSymbol t_decode(int N, Code c);
// sum of r - 1 over the letters
int filtration_degree(int N, const Word& w);
int filtration_degree(int N, const UElement& x);  // maximum over terms, -1 for zero
UElement free_mul(const UElement& a, const UElement& b);
std::string free_str(int N, const UElement& x);

// z^{-e} coefficients, e = 0..order, of tr S^(m) C_1..C_m T_1(z + s_1)...T_m(z + s_m)
std::vector<UElement> bethe_series_shifted(CaseTag tag, int N, int m, const Matrix& C, int order, const std::vector<Rational>& shifts);
// shifts 0, 1, .., m-1 (orthogonal) or 0, -1, .., -(m-1) (symplectic, m <= n)
std::vector<UElement> bethe_series(CaseTag tag, int N, int m, const Matrix& C, int order);

enum class Schedule { leftmost, rightmost };

// Exchange rules [t^(r)_{ij}, t^(s)_{kl}] from the RTT relation multiplied by (z-v)(z-v-kappa),
// with t^(r)_{ij} eliminated through T'(z+kappa)T(z) = 1 whenever (i,j) is not the lex-first of {(i,j), (j',i')}.
// Used for words of filtration degree <= bound; longer words are discarded.
class RttRules {
public:
    RttRules(CaseTag tag, int N, int bound);

    CaseTag tag() const { return tag_; }
    int N() const { return N_; }
    int bound() const { return bound_; }
    const RMatrix& r() const { return R_; }

    // z^a v^b coefficient of the cleared relation for the matrix entry (ik),(jl)
    UElement relation(int i, int k, int j, int l, int a, int b) const;
    // [t^(r)_{ij}, t^(s)_{kl}] as an unnormalized element
    UElement commutator(int r, int i, int j, int s, int k, int l) const;
    UElement commutator_codes(Code a, Code b) const;
    bool independent(int i, int j) const { return kind_[static_cast<std::size_t>(i * N_ + j)] == 0; }
    // t^(r)_{ij} in terms of independent generators and lower filtration degree
    UElement eliminate(int r, int i, int j) const;

    // ordered words (nondecreasing codes) modulo degree > bound
    UElement normal_form(const UElement& x, Schedule s = Schedule::leftmost) const;
    UElement normal_form_word(const Word& w, Schedule s = Schedule::leftmost) const;

private:
    // t^(r)_{ab} with t^(0) the unit
    UElement t(int r, int a, int b) const;
    // z^{-p} coefficient of T'(z + kappa)_{ik}
    UElement tprime_shifted(int p, int i, int k) const;

    CaseTag tag_;
    int N_;
    int bound_;
    RMatrix R_;
    std::vector<Rational> Pm_, Qm_;  // dense (ik),(jl)
    Form form_;
    std::vector<int> kind_;  // 0 independent, 1 partner of a lex-first entry, 2 self-partner eliminated

    mutable std::shared_mutex mu_;
    mutable std::map<std::tuple<int, int, int, int, int, int>, UElement> comm_memo_;
    mutable std::unordered_map<Word, UElement> nf_memo_;
    mutable std::map<std::tuple<int, int, int>, UElement> elim_memo_;
};

struct CommutatorCheck {
    std::string left;   // "tau1^(e)"
    std::string right;  // "tau2^(f)"
    int degree = 0;
    bool vanishes = false;
};
struct CommutativityReport {
    int bound = 0;
    std::vector<CommutatorCheck> checks;
    bool pass = false;
};

// all pairs among the coefficients of tau_1, tau_2 whose commutator has degree <= bound
CommutativityReport bounded_commutativity(CaseTag tag, int N, const Matrix& C, int bound);

// t^(r)_{ij} -> F_{ij}[r-1] as a normalized element
UElement symbol_image(const Algebra& alg, const UElement& x);

struct GradedEntry {
    int i = 0;
    int e = 0;
    bool match = false;
};
struct GradedReport {
    std::vector<GradedEntry> entries;
    bool pass = false;
};

// Top part of tr S^(m) M_1...M_m, M = 1 - e^{-d/dz} C T(z), with C = (1 + hB/2)(1 - hB/2)^{-1}
// and deg h = deg z^{-1} = deg d/dz = -1, compared under symbol_image with gt_generators(m, B, order).
GradedReport graded_compare(const Algebra& alg, int m, const Matrix& B, int order);

}  // namespace ffc
