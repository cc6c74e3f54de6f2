#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "ffcenter/brauer.hpp"
#include "ffcenter/commpoly.hpp"
#include "ffcenter/exact.hpp"

namespace ffc {

enum class CaseTag { orthogonal, symplectic };

const char* case_name(CaseTag c);

struct OddSymplecticDimension : std::invalid_argument {
    OddSymplecticDimension() : std::invalid_argument("symplectic dimension must be even") {}
};
struct BadSlots : std::invalid_argument {
    BadSlots() : std::invalid_argument("bad tensor slots") {}
};
struct PoleAtSpecialization : std::domain_error {
    explicit PoleAtSpecialization(const std::string& w) : std::domain_error(w) {}
};
struct RingMismatch : std::invalid_argument {
    RingMismatch() : std::invalid_argument("operand sizes do not match") {}
};
struct OutOfDirectRange : std::domain_error {
    OutOfDirectRange() : std::domain_error("outside the directly specializable range") {}
};

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(int n);
Matrix identity_matrix(int n);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
// rows may have any common length
int matrix_rank(Matrix a);

struct Form {
    CaseTag tag = CaseTag::orthogonal;
    int N = 0;
    Matrix G;
    Matrix Ginv;
    bool antidiagonal = true;

    int n() const { return N / 2; }
    // 0-based involution i -> N-1-i
    int prime(int i) const { return N - 1 - i; }
    // epsilon_i for the symplectic form, 0-based; 1 in the orthogonal case
    int eps(int i) const { return tag == CaseTag::symplectic && i >= N / 2 ? -1 : 1; }
    // omega specialization N or -N
    Rational omega() const { return Rational(tag == CaseTag::orthogonal ? N : -N); }
    // A' = G A^t G^{-1}
    Matrix prime_of(const Matrix& a) const;
};

Form build_form(CaseTag tag, int N);
// G = identity (orthogonal only)
Form identity_form(int N);

// Sparse operator on (C^N)^{(x)m}; multi-index (a_1..a_m) encodes as sum a_k N^{m-k}, slot 1 most significant.
class TensorOp {
public:
    using Index = std::uint32_t;
    using Entries = std::map<std::pair<Index, Index>, Rational>;

    TensorOp(int m = 1, int N = 1) : m_(m), N_(N) {}
    static TensorOp identity(int m, int N);

    int m() const { return m_; }
    int N() const { return N_; }
    Index dim() const;
    const Entries& entries() const { return e_; }
    std::size_t nnz() const { return e_.size(); }
    Rational at(Index row, Index col) const;
    void add(Index row, Index col, const Rational& v);

    Index encode(const std::vector<int>& a) const;
    std::vector<int> decode(Index idx) const;

    TensorOp& operator+=(const TensorOp& o);
    TensorOp& operator-=(const TensorOp& o);
    TensorOp& operator*=(const Rational& c);
    friend TensorOp operator+(TensorOp a, const TensorOp& b) { return a += b; }
    friend TensorOp operator-(TensorOp a, const TensorOp& b) { return a -= b; }
    friend TensorOp operator*(TensorOp a, const Rational& c) { return a *= c; }
    friend TensorOp operator*(const Rational& c, TensorOp a) { return a *= c; }
    friend TensorOp operator*(const TensorOp& a, const TensorOp& b);
    friend bool operator==(const TensorOp& a, const TensorOp& b) { return a.m_ == b.m_ && a.N_ == b.N_ && a.e_ == b.e_; }
    friend bool operator!=(const TensorOp& a, const TensorOp& b) { return !(a == b); }

    Rational trace() const;
    int rank() const;
    // conjugation by the slot permutation: slot k of the result is slot perm[k] of this
    TensorOp permuted(const std::vector<int>& perm) const;

private:
    int m_, N_;
    Entries e_;
};

// 0-based slots i < j
std::pair<TensorOp, TensorOp> pq_ops(int i, int j, int m, const Form& form);

TensorOp act_diagram(const BrauerDiagram& d, const Form& form);
TensorOp act_brauer(const BrauerElement& x, const Form& form);
// act_brauer of the memoized symmetrizer, memoized per (case, N, m, antidiagonal)
const TensorOp& symmetrizer_image(const Form& form, int m);

// contraction of slot (0-based)
TensorOp partial_trace(const TensorOp& op, int slot);
// trace over the last m - keep slots
TensorOp trace_tail(const TensorOp& op, int keep);

template <class R>
using RingMatrix = std::vector<std::vector<R>>;

// tr(weight M^1_1 ... M^m_m), entries multiplied in slot order 1..m
template <class R>
R trace_product(const TensorOp& weight, const std::vector<RingMatrix<R>>& mats) {
    if (static_cast<int>(mats.size()) != weight.m()) throw RingMismatch();
    for (auto& M : mats)
        if (static_cast<int>(M.size()) != weight.N()) throw RingMismatch();
    R total{};
    bool have = false;
    for (auto& [rc, w] : weight.entries()) {
        auto a = weight.decode(rc.first);
        auto b = weight.decode(rc.second);
        R t = mats[0][static_cast<std::size_t>(b[0])][static_cast<std::size_t>(a[0])];
        for (int k = 1; k < weight.m(); ++k) t = t * mats[static_cast<std::size_t>(k)][static_cast<std::size_t>(b[k])][static_cast<std::size_t>(a[k])];
        t = w * t;
        if (have) total = total + t;
        else {
            total = t;
            have = true;
        }
    }
    return total;
}

// tr S^(m) X_1 ... X_m with X = diag(h_1..h_n, [0], -h_n..-h_1), returned as a polynomial in
// variables 0..n-1 standing for h_1^2..h_n^2
CommPoly hc_leading(CaseTag tag, int N, int m);

}  // namespace ffc
