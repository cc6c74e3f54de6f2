#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ffcenter/envelop.hpp"
#include "ffcenter/tensorrep.hpp"

namespace ffc {

struct BadDegree : std::invalid_argument {
    BadDegree() : std::invalid_argument("degree outside the component range") {}
};
struct NoSingularRange : std::domain_error {
    NoSingularRange() : std::domain_error("no singular vectors for m > n") {}
};

// Degree-m polynomials: commuting z_i (orthogonal) or anticommuting zeta_i (symplectic).
// A basis element is its sorted index tuple, nondecreasing or strictly increasing.
struct PolyComponent {
    CaseTag tag = CaseTag::orthogonal;
    int N = 0;
    int m = 0;
    std::vector<std::vector<int>> basis;

    std::size_t dim() const { return basis.size(); }
    int index(const std::vector<int>& mono) const;
};

PolyComponent poly_component(CaseTag tag, int N, int m);

// polynomials as sorted index tuples -> coefficient
using Poly = std::map<std::vector<int>, Rational>;

// e lowers degree by 2, f raises it by 2, h is the scalar on degree m
struct SL2Action {
    PolyComponent source;
    Matrix e;  // dim(m-2) x dim(m)
    Matrix f;  // dim(m+2) x dim(m)
    Matrix h;  // dim(m) x dim(m)
};

Poly sl2_e(CaseTag tag, int N, const Poly& x);
Poly sl2_f(CaseTag tag, int N, const Poly& x);
Rational sl2_h_scalar(CaseTag tag, int N, int m);

SL2Action sl2_action(CaseTag tag, int N, int m);

// columns are images of basis elements
Matrix extremal_projector(CaseTag tag, int N, int m);

// act_brauer(S^(m)) transported to the component through the (anti)symmetrizer isomorphism
Matrix symmetrizer_on_component(CaseTag tag, int N, int m);

// tr p Phi^(m) with the symplectic 1/(n-m+1) prefactor
TauPoly singular_trace_phi(const Algebra& alg, int m);

}  // namespace ffc
