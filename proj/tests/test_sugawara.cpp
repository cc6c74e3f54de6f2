#include <doctest.h>

#include <random>

#include "ffcenter/sugawara.hpp"

using namespace ffc;

namespace {

std::shared_ptr<const Algebra> at_level(CaseTag t, int N, long k) { return Algebra::make(t, N, Rational(k)); }

bool all_pass(const Algebra& alg, const TauPoly& t) {
    for (auto& c : t)
        if (!verify_ss(alg, c).pass) return false;
    return true;
}

bool has_f1_residual(const SSReport& r) {
    for (auto& p : r.probes)
        if (p.mode == 1 && !p.residual.is_zero()) return true;
    return false;
}

Matrix diag_x(int n, const std::vector<long>& h) {
    Matrix d = zero_matrix(2 * n);
    for (int i = 0; i < n; ++i) {
        d[i][i] = h[static_cast<std::size_t>(i)];
        d[2 * n - 1 - i][2 * n - 1 - i] = -h[static_cast<std::size_t>(i)];
    }
    return d;
}

}  // namespace

TEST_CASE("generator matrices are skew and reassemble F") {
    for (auto [t, N] : {std::pair{CaseTag::orthogonal, 3}, {CaseTag::orthogonal, 4}, {CaseTag::symplectic, 4}, {CaseTag::symplectic, 6}}) {
        auto alg = Algebra::make(t, N);
        auto mats = generator_matrices(*alg);
        for (auto& M : mats) {
            Matrix p = alg->form().prime_of(M);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) CHECK(M[i][j] + p[i][j] == Rational());
        }
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                UElement s;
                for (int p = 0; p < alg->num_pairs(); ++p) s += alg->generator(alg->pair(p).first, alg->pair(p).second, 0) * mats[p][i][j];
                CHECK(s == alg->generator(i, j, 0));
            }
    }
}

TEST_CASE("phi for m = 1") {
    auto o3 = Algebra::make(CaseTag::orthogonal, 3);
    TauPoly t = phi(*o3, 1);
    CHECK(phi_coeff(t, 1, 0) == UElement(3));
    CHECK(phi_coeff(t, 1, 1).is_zero());
    auto sp4 = Algebra::make(CaseTag::symplectic, 4);
    for (auto& s : {phi_symplectic_direct(*sp4, 1), phi_symplectic_extended(*sp4, 1)}) {
        CHECK(phi_coeff(s, 1, 0) == UElement(2));
        CHECK(phi_coeff(s, 1, 1).is_zero());
    }
    CHECK_THROWS_AS(phi_symplectic_direct(*sp4, 3), OutOfDirectRange);
}

TEST_CASE("orthogonal N = 3, m = 2") {
    auto o3 = Algebra::make(CaseTag::orthogonal, 3);
    TauPoly t = phi(*o3, 2);
    CHECK(phi_coeff(t, 2, 0) == UElement(5));
    CHECK(verify_ss(*o3, phi_coeff(t, 2, 2)).pass);
    CHECK(all_pass(*o3, t));
    // every phi coefficient lies in the negative-mode part
    for (auto& c : t)
        for (auto& [w, x] : c.terms())
            for (Code l : w) CHECK(o3->code_mode(l) < 0);
}

TEST_CASE("non-critical level fails") {
    auto o3 = at_level(CaseTag::orthogonal, 3, 0);
    SSReport r = verify_ss(*o3, phi_coeff(phi(*o3, 2), 2, 2));
    CHECK_FALSE(r.pass);
    CHECK(has_f1_residual(r));
    auto sp4 = at_level(CaseTag::symplectic, 4, -2);
    SSReport q = verify_ss(*sp4, phi_coeff(phi(*sp4, 2), 2, 2));
    CHECK_FALSE(q.pass);
    CHECK(has_f1_residual(q));
    CHECK(verify_ss(*o3, UElement(1)).pass);
}

TEST_CASE("reduce_trace_symplectic examples") {
    for (int n : {2, 3, 4}) {
        Matrix I = identity_matrix(2 * n);
        CHECK(reduce_trace_symplectic({n, {{I, SlotTag::identity}}}) == Rational(2));
        CHECK(reduce_trace_symplectic({n, {{I, SlotTag::identity}, {I, SlotTag::identity}}}) == Rational(2 * n + 1));
    }
    // (1/(n-1)) tr S^(2) equals the projector trace for n >= 2
    CHECK(symmetrizer_image(build_form(CaseTag::symplectic, 6), 2).trace() / Rational(2) == Rational(7));
    Matrix X = diag_x(2, {1, 2});
    TaggedScalarWord w{2, {{X, SlotTag::skew}, {X, SlotTag::skew}, {X, SlotTag::skew}, {X, SlotTag::skew}}};
    CHECK(reduce_trace_symplectic(w) == Rational(4));
    CHECK(reduce_trace_symplectic(w, PeelOrder::first_skew) == Rational(4));
    w.slots.pop_back();
    CHECK(reduce_trace_symplectic(w) == Rational());
}

TEST_CASE("reduction agrees with direct traces and between schedules") {
    std::mt19937 rng(17);
    for (int n : {2, 3}) {
        auto alg = Algebra::make(CaseTag::symplectic, 2 * n);
        auto mats = generator_matrices(*alg);
        const TensorOp* S[4] = {nullptr, nullptr, nullptr, nullptr};
        for (int m = 1; m <= 2 * n && m <= 4; ++m) {
            for (int it = 0; it < 30; ++it) {
                TaggedScalarWord w{n, {}};
                std::vector<RingMatrix<Rational>> ms;
                for (int k = 0; k < m; ++k) {
                    if (rng() % 3 == 0) w.slots.push_back({identity_matrix(2 * n), SlotTag::identity});
                    else w.slots.push_back({mats[rng() % mats.size()], SlotTag::skew});
                    ms.push_back(w.slots.back().M);
                }
                Rational a = reduce_trace_symplectic(w, PeelOrder::identity_then_last);
                CHECK(a == reduce_trace_symplectic(w, PeelOrder::first_skew));
                if (m <= n) {
                    if (!S[m - 1]) S[m - 1] = &symmetrizer_image(alg->form(), m);
                    CHECK(a == trace_product(*S[m - 1], ms) / Rational(n - m + 1));
                }
            }
        }
    }
}

TEST_CASE("symplectic extension of the leading term") {
    CHECK(hc_leading_extended(2, 4) == elementary_symmetric(2, 2));
    CHECK(hc_leading_extended(2, 3).is_zero());
    CHECK(hc_leading_extended(3, 4) == elementary_symmetric(2, 3) * Rational(1, 2));
    for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {2, 1}, {3, 3}})
        CHECK(hc_leading_extended(n, m) == hc_leading(CaseTag::symplectic, 2 * n, m) * Rational(1, n - m + 1));
}

TEST_CASE("symplectic direct and extended agree") {
    for (auto [N, m] : {std::pair{4, 2}, {6, 2}}) {
        auto alg = Algebra::make(CaseTag::symplectic, N);
        TauPoly d = phi_symplectic_direct(*alg, m), e = phi_symplectic_extended(*alg, m);
        CHECK(d == e);
        CHECK(all_pass(*alg, d));
    }
}

TEST_CASE("symplectic n = 2 beyond the direct range") {
    auto sp4 = Algebra::make(CaseTag::symplectic, 4);
    TauPoly t3 = phi(*sp4, 3);
    CHECK(all_pass(*sp4, t3));
}

TEST_CASE("Pfaffian") {
    auto o2 = std::make_shared<const Algebra>(identity_form(2), Rational(0));
    CHECK(pfaffian(*o2) == o2->generator(0, 1, -1));
    auto o2a = Algebra::make(CaseTag::orthogonal, 2);
    // Ft_12 = F_11 g_12
    CHECK(pfaffian(*o2a) == o2a->generator(0, 0, -1));
    auto o4i = std::make_shared<const Algebra>(identity_form(4), Rational(-2));
    UElement pf = pfaffian(*o4i);
    CHECK(pf == pfaffian_restricted(*o4i));
    CHECK(verify_ss(*o4i, pf).pass);
    auto o4 = Algebra::make(CaseTag::orthogonal, 4);
    UElement pfa = pfaffian(*o4);
    CHECK(verify_ss(*o4, pfa).pass);
    CHECK(Algebra::symbol(pfa).total_degree() == 2);
    CHECK_FALSE(verify_ss(*at_level(CaseTag::orthogonal, 4, -1), pfaffian(*at_level(CaseTag::orthogonal, 4, -1))).pass);
}

TEST_CASE("symbols of complete sets") {
    auto o4 = Algebra::make(CaseTag::orthogonal, 4);
    CommPoly a = Algebra::symbol(phi_coeff(phi(*o4, 2), 2, 2)), b = Algebra::symbol(pfaffian(*o4));
    CHECK(a.total_degree() == 2);
    std::mt19937 rng(99);
    std::map<int, Rational> pt;
    for (auto* f : {&a, &b})
        for (auto& [mono, c] : f->terms())
            for (auto& [v, e] : mono) pt[v] = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
    CHECK(jacobian_rank({a, b}, pt) == 2);
    CHECK(jacobian_rank({a, a * Rational(3)}, pt) == 1);
}
