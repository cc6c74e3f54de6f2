#include "ffcenter/ffcenter.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "ffcenter/brauer.hpp"
#include "ffcenter/gaudin.hpp"
#include "ffcenter/howe.hpp"
#include "ffcenter/sugawara.hpp"
#include "ffcenter/yangian.hpp"

struct ffc_algebra {
    std::shared_ptr<const ffc::Algebra> alg;
};

namespace {

using json = nlohmann::json;
using namespace ffc;

thread_local std::string g_error;

// codes fit in 16 bits up to this rank
constexpr int kMaxN = 10;

struct BadRequest : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class F>
ffc_status guarded(F&& f) {
    g_error.clear();
    try {
        f();
        return FFC_OK;
    } catch (const json::exception& e) {
        g_error = e.what();
        return FFC_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        g_error = e.what();
        return FFC_OUT_OF_RANGE;
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return FFC_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_error = e.what();
        return FFC_DOMAIN_ERROR;
    } catch (const std::exception& e) {
        g_error = e.what();
        return FFC_INTERNAL_ERROR;
    } catch (...) {
        g_error = "unknown error";
        return FFC_INTERNAL_ERROR;
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void emit(char** out, const json& j) {
    if (!out) throw BadRequest("null output pointer");
    *out = dup(j.dump());
}

const Algebra& need(const ffc_algebra* a) {
    if (!a || !a->alg) throw BadRequest("null algebra handle");
    return *a->alg;
}

CaseTag to_tag(ffc_case c) {
    if (c == FFC_ORTHOGONAL) return CaseTag::orthogonal;
    if (c == FFC_SYMPLECTIC) return CaseTag::symplectic;
    throw BadRequest("unknown case");
}

void check_rank(int N) {
    if (N < 2 || N > kMaxN) throw BadRequest("N must lie in [2, " + std::to_string(kMaxN) + "]");
}

void check_m(int m, int top) {
    if (m < 1 || m > top) throw std::out_of_range("m must lie in [1, " + std::to_string(top) + "]");
}

json element_json(const Algebra& alg, const UElement& x) {
    json terms = json::array();
    for (auto& [w, c] : x.sorted()) terms.push_back({{"coeff", c.str()}, {"monomial", alg.word_strings(w)}});
    return terms;
}

json tau_json(const Algebra& alg, const TauPoly& t) {
    json out = json::array();
    for (std::size_t k = 0; k < t.size(); ++k) out.push_back({{"tauDegree", k}, {"terms", element_json(alg, t[k])}});
    return out;
}

// variable v stands for h_{v+1}^2
json hpoly_json(const CommPoly& p) {
    json terms = json::array();
    for (auto& [mono, c] : p.terms()) {
        json m = json::array();
        for (auto& [v, e] : mono) m.push_back({"h" + std::to_string(v + 1) + "^2", e});
        terms.push_back({{"coeff", c.str()}, {"monomial", m}});
    }
    return terms;
}

json matrix_json(const Matrix& a) {
    json rows = json::array();
    for (auto& r : a) {
        json row = json::array();
        for (auto& x : r) row.push_back(x.str());
        rows.push_back(row);
    }
    return rows;
}

json report_json(const Algebra& alg, const std::string& id, const SSReport& r) {
    json fails = json::array();
    for (auto& p : r.probes)
        if (!p.residual.is_zero())
            fails.push_back({{"generator", alg.code_str(alg.code(p.pair, p.mode))}, {"residual", element_json(alg, p.residual)}});
    return {{"id", id}, {"pass", r.pass}, {"probes", r.probes.size()}, {"failures", fails}};
}

Rational rational_of(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw BadRequest("rationals are integers or \"p/q\" strings");
}

Matrix b_matrix(const Form& f, const char* const* b, int count) {
    std::vector<Rational> d;
    if (count == 0) {
        for (int i = 0; i < f.n(); ++i) d.push_back(Rational(2 * i + 1, i + 2));
    } else {
        if (count != f.n() || !b) throw BadRequest("B needs " + std::to_string(f.n()) + " diagonal entries");
        for (int i = 0; i < count; ++i) {
            if (!b[i]) throw BadRequest("null B entry");
            d.push_back(Rational::parse(b[i]));
        }
    }
    return diagonal_b(f, d);
}

json b_json(const Matrix& B) {
    json d = json::array();
    for (std::size_t i = 0; i < B.size() / 2; ++i) d.push_back(B[i][i].str());
    return d;
}

Matrix mmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

int top_m(const Algebra& alg) { return alg.tag() == CaseTag::orthogonal ? kMaxStrands : std::min(kMaxStrands, alg.N()); }

}  // namespace

extern "C" {

ffc_status ffc_algebra_create(ffc_case c, int N, const char* level, ffc_algebra** out) {
    return guarded([&] {
        if (!out) throw BadRequest("null output pointer");
        CaseTag tag = to_tag(c);
        check_rank(N);
        auto alg = level ? Algebra::make(tag, N, Rational::parse(level)) : Algebra::make(tag, N);
        *out = new ffc_algebra{std::move(alg)};
    });
}

void ffc_algebra_destroy(ffc_algebra* alg) { delete alg; }

ffc_status ffc_algebra_describe(const ffc_algebra* a, char** out) {
    return guarded([&] {
        const Algebra& alg = need(a);
        emit(out, {{"case", case_name(alg.tag())}, {"N", alg.N()}, {"level", alg.level().str()}});
    });
}

ffc_status ffc_phi(const ffc_algebra* a, int m, char** out) {
    return guarded([&] {
        const Algebra& alg = need(a);
        check_m(m, top_m(alg));
        emit(out, tau_json(alg, phi(alg, m)));
    });
}

ffc_status ffc_pfaffian(const ffc_algebra* a, char** out) {
    return guarded([&] {
        const Algebra& alg = need(a);
        emit(out, {{"terms", element_json(alg, pfaffian(alg))}});
    });
}

ffc_status ffc_verify_ss(const ffc_algebra* a, int m, int* pass, char** out) {
    return guarded([&] {
        const Algebra& alg = need(a);
        check_m(m, top_m(alg));
        TauPoly t = phi(alg, m);
        json elems = json::array();
        bool ok = true;
        for (int k = 0; k <= m; ++k) {
            std::string id = "phi_" + std::to_string(m) + "," + std::to_string(k);
            SSReport r = verify_ss(alg, phi_coeff(t, m, k), id);
            ok = ok && r.pass;
            elems.push_back(report_json(alg, id, r));
        }
        if (pass) *pass = ok;
        emit(out, {{"pass", ok}, {"elements", elems}});
    });
}

ffc_status ffc_verify_pfaffian(const ffc_algebra* a, int* pass, char** out) {
    return guarded([&] {
        const Algebra& alg = need(a);
        SSReport r = verify_ss(alg, pfaffian(alg), "pfaffian");
        if (pass) *pass = r.pass;
        emit(out, {{"pass", r.pass}, {"elements", json::array({report_json(alg, "pfaffian", r)})}});
    });
}

ffc_status ffc_hc_leading(ffc_case c, int N, int m, char** out) {
    return guarded([&] {
        CaseTag tag = to_tag(c);
        check_rank(N);
        if (tag == CaseTag::symplectic && N % 2) throw OddSymplecticDimension();
        check_m(m, tag == CaseTag::orthogonal ? kMaxStrands : std::min(kMaxStrands, N));
        json j;
        if (tag == CaseTag::orthogonal || m <= N / 2) j["trace"] = hpoly_json(hc_leading(tag, N, m));
        else j["trace"] = nullptr;
        // symplectic traces also carry the 1/(n-m+1) normalization, extended past m = n
        if (tag == CaseTag::symplectic) j["normalized"] = hpoly_json(hc_leading_extended(N / 2, m));
        emit(out, j);
    });
}

ffc_status ffc_gaudin(const char* manifest, int* pass, char** out) {
    return guarded([&] {
        if (!manifest) throw BadRequest("null manifest");
        json man = json::parse(manifest);
        std::string a = man.at("algebra").get<std::string>();
        CaseTag tag;
        if (a == "o" || a == "orthogonal") tag = CaseTag::orthogonal;
        else if (a == "sp" || a == "symplectic") tag = CaseTag::symplectic;
        else throw BadRequest("algebra must be o or sp");
        int N;
        if (man.contains("N")) N = man.at("N").get<int>();
        else if (man.contains("n") && tag == CaseTag::symplectic) N = 2 * man.at("n").get<int>();
        else throw BadRequest("manifest needs N (or n for sp)");
        check_rank(N);
        auto alg = Algebra::make(tag, N);
        const Form& f = alg->form();
        std::vector<Rational> d;
        if (man.contains("B"))
            for (auto& x : man.at("B")) d.push_back(rational_of(x));
        else
            d.assign(static_cast<std::size_t>(f.n()), Rational());
        if (static_cast<int>(d.size()) != f.n()) throw BadRequest("B needs " + std::to_string(f.n()) + " diagonal entries");
        Matrix B = diagonal_b(f, d);
        int m = man.at("m").get<int>();
        int order = man.at("order").get<int>();
        if (order < 0 || order > 12) throw std::out_of_range("order must lie in [0, 12]");
        auto rho = vector_representation(*alg);
        std::vector<EvalModule> mods;
        json points = json::array();
        for (auto& mod : man.at("modules")) {
            if (mod.value("type", std::string("vector")) != "vector") throw BadRequest("only vector modules are built in");
            Rational pt = rational_of(mod.at("point"));
            mods.push_back(evaluation_module(*alg, rho, pt));
            points.push_back(pt.str());
        }
        if (mods.empty()) throw BadRequest("at least one module is required");
        if (std::pow(static_cast<double>(N), static_cast<double>(mods.size())) > 4096) throw std::out_of_range("tensor product too large");
        GaudinFamily fam(*alg, mods, B, m);
        json coeffs = json::array();
        std::vector<Matrix> all;
        for (int i = 0; i <= m; ++i)
            for (int e = 0; e <= order; ++e) {
                Matrix c = fam.series_coefficient(i, e);
                coeffs.push_back({{"i", i}, {"e", e}, {"matrix", matrix_json(c)}});
                all.push_back(std::move(c));
            }
        bool commute = true;
        for (std::size_t x = 0; x < all.size() && commute; ++x)
            for (std::size_t y = x + 1; y < all.size() && commute; ++y) commute = mmul(all[x], all[y]) == mmul(all[y], all[x]);
        if (pass) *pass = commute;
        emit(out, {{"case", case_name(tag)}, {"N", N}, {"B", b_json(B)}, {"points", points}, {"m", m}, {"order", order},
                   {"dimension", fam.dim()}, {"coefficients", coeffs}, {"commute", commute}});
    });
}

ffc_status ffc_shift_of_argument(const ffc_algebra* a, const char* const* b, int count, int* pass, char** out) {
    return guarded([&] {
        const Algebra& alg = need(a);
        Matrix B = b_matrix(alg.form(), b, count);
        auto gens = shift_of_argument(alg, B);
        json list = json::array();
        bool commute = true;
        for (std::size_t x = 0; x < gens.size(); ++x) {
            list.push_back({{"name", gens[x].name}, {"terms", element_json(alg, gens[x].value)}});
            for (std::size_t y = x + 1; y < gens.size(); ++y)
                commute = commute && alg.commutator(gens[x].value, gens[y].value).is_zero();
        }
        if (pass) *pass = commute;
        emit(out, {{"B", b_json(B)}, {"generators", list}, {"commute", commute}});
    });
}

ffc_status ffc_yangian(const ffc_algebra* a, int m, int order, int bound, const char* const* b, int count, int* pass, char** out) {
    return guarded([&] {
        const Algebra& alg = need(a);
        if (order < 1 || order > 6) throw std::out_of_range("order must lie in [1, 6]");
        if (bound < 0 || bound > 3) throw std::out_of_range("bound must lie in [0, 3]");
        Matrix B = b_matrix(alg.form(), b, count);
        GradedReport g = graded_compare(alg, m, B, order);
        json entries = json::array();
        for (auto& e : g.entries) entries.push_back({{"i", e.i}, {"e", e.e}, {"match", e.match}});
        CommutativityReport c = bounded_commutativity(alg.tag(), alg.N(), identity_matrix(alg.N()), bound);
        json checks = json::array();
        for (auto& k : c.checks) checks.push_back({{"left", k.left}, {"right", k.right}, {"degree", k.degree}, {"vanishes", k.vanishes}});
        RMatrix R = rmatrix(alg.tag(), alg.N());
        bool ok = g.pass && c.pass;
        if (pass) *pass = ok;
        emit(out, {{"kappa", R.kappa.str()},
                   {"B", b_json(B)},
                   {"graded", {{"m", m}, {"order", order}, {"entries", entries}, {"pass", g.pass}}},
                   {"bounded", {{"bound", c.bound}, {"checks", checks}, {"pass", c.pass}}},
                   {"pass", ok}});
    });
}

ffc_status ffc_brauer_check(int max_m, int* pass, char** out) {
    return guarded([&] {
        check_m(max_m, kMaxStrands);
        json rows = json::array();
        bool ok = true;
        for (int m = 1; m <= max_m; ++m) {
            BrauerCheck r = brauer_check(m);
            ok = ok && r.pass();
            rows.push_back({{"m", m},
                            {"relations", r.relations},
                            {"formulas_agree", r.formulas_agree},
                            {"idempotent", r.idempotent},
                            {"absorbs", r.absorbs},
                            {"kills", r.kills}});
        }
        if (pass) *pass = ok;
        emit(out, {{"results", rows}, {"pass", ok}});
    });
}

void ffc_string_free(char* s) { std::free(s); }

const char* ffc_last_error_message(void) { return g_error.c_str(); }

const char* ffc_status_name(ffc_status s) {
    switch (s) {
        case FFC_OK: return "ok";
        case FFC_INVALID_ARGUMENT: return "invalid argument";
        case FFC_OUT_OF_RANGE: return "out of range";
        case FFC_DOMAIN_ERROR: return "domain error";
        case FFC_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

}  // extern "C"
