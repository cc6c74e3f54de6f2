#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffcenter/commpoly.hpp"
#include "ffcenter/envelop.hpp"
#include "ffcenter/exact.hpp"
#include "ffcenter/tensorrep.hpp"

namespace ffc {

struct NotRegular : std::domain_error {
    NotRegular() : std::domain_error("reduced trace has a pole at nu = n") {}
};
struct NoPeelableSlot : std::logic_error {
    NoPeelableSlot() : std::logic_error("no uncontaminated slot left to peel") {}
};

// F[r] = sum_p M_p (x) F_p[r] over canonical pairs p
std::vector<Matrix> generator_matrices(const Algebra& alg);

// scalar weights of tr S F[r]_{p_1} ... F[r]_{p_s}, keyed by the canonical pair tuple
using PairWeights = std::map<std::vector<int>, Rational>;

// expands tr S Phi_1 ... Phi_m with the weight of s F-slots supplied by weights(s)
TauPoly assemble_phi(const Algebra& alg, int m, const std::function<PairWeights(int)>& weights);

TauPoly phi_orthogonal(const Algebra& alg, int m);
// (1/(n-m+1)) tr S Phi_1 ... Phi_m, m <= n
TauPoly phi_symplectic_direct(const Algebra& alg, int m);
// same, every scalar weight through reduce_trace_symplectic; 1 <= m <= 2n
TauPoly phi_symplectic_extended(const Algebra& alg, int m);
// orthogonal, or symplectic direct for m <= n and extended beyond
TauPoly phi(const Algebra& alg, int m);

// phi_{mk} is the coefficient of tau^{m-k}
inline const UElement& phi_coeff(const TauPoly& t, int m, int k) { return t[static_cast<std::size_t>(m - k)]; }

enum class SlotTag { identity, skew, product };
struct TaggedSlot {
    Matrix M;
    SlotTag tag = SlotTag::skew;
};
struct TaggedScalarWord {
    int n = 1;
    std::vector<TaggedSlot> slots;
};

enum class PeelOrder {
    identity_then_last,  // identity slots first, then the last clean skew slot
    first_skew,          // the first clean skew slot, identity slots only when no skew slot is clean
};

// (1/(nu-m+1)) tr S^(m) slots as a function of nu
RatFun reduce_trace_symbolic(const TaggedScalarWord& w, PeelOrder order = PeelOrder::identity_then_last);
// the same at nu = n
Rational reduce_trace_symplectic(const TaggedScalarWord& w, PeelOrder order = PeelOrder::identity_then_last);

// (1/(n-m+1)) tr S^(m) X_1 ... X_m through the reduction engine, in variables 0..n-1 for h_i^2
CommPoly hc_leading_extended(int n, int m);

// noncommutative Pfaffian of F[-1] G, full sum over the symmetric group
UElement pfaffian(const Algebra& alg);
// the signed sum over the subset of ordered pairings, valid for G = identity
UElement pfaffian_restricted(const Algebra& alg);

struct SSProbe {
    int pair;
    int mode;
    UElement residual;
};
struct SSReport {
    std::string id;
    std::vector<SSProbe> probes;
    bool pass = true;
};

// applies every canonical F_p[0] and F_p[1] to vec in the vacuum module
SSReport verify_ss(const Algebra& alg, const UElement& vec, const std::string& id = "");

// rank of the Jacobian of polys with respect to every variable occurring, at the given point
int jacobian_rank(const std::vector<CommPoly>& polys, const std::map<int, Rational>& point);

}  // namespace ffc
