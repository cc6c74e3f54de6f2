#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffcenter/ffcenter.h"

using json = nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlgebraSpec {
    std::string algebra;
    int N = 0;
    int n = 0;
    std::string level;
};

struct Opts {
    AlgebraSpec spec;
    int m = 0;
    int order = 3;
    int bound = 2;
    std::vector<std::string> B;
    std::string manifest;
    std::string out;
    std::string what;
};

void add_algebra(CLI::App* sub, Opts& o, bool with_level) {
    sub->add_option("--algebra", o.spec.algebra, "o or sp")->check(CLI::IsMember({"o", "sp"}));
    sub->add_option("--N", o.spec.N, "dimension of the vector representation");
    sub->add_option("--n", o.spec.n, "rank, N = 2n (sp only)");
    if (with_level) sub->add_option("--level", o.spec.level, "level K as p/q, critical by default");
}

ffc_case case_of(const AlgebraSpec& s) {
    if (s.algebra.empty()) throw Usage("--algebra is required");
    return s.algebra == "o" ? FFC_ORTHOGONAL : FFC_SYMPLECTIC;
}

int dimension(const AlgebraSpec& s) {
    if (s.N && s.n) throw Usage("give either --N or --n");
    if (s.n) {
        if (s.algebra != "sp") throw Usage("--n is only accepted for sp; use --N");
        return 2 * s.n;
    }
    if (!s.N) throw Usage("--N or --n is required");
    return s.N;
}

struct Handle {
    ffc_algebra* h = nullptr;
    ~Handle() { ffc_algebra_destroy(h); }
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ffc_status s) {
    if (s != FFC_OK) throw Failure(std::string(ffc_status_name(s)) + ": " + ffc_last_error_message());
}

json take(char* s) {
    json j = json::parse(s);
    ffc_string_free(s);
    return j;
}

void open_algebra(const Opts& o, Handle& a, json& desc) {
    ffc_case c = case_of(o.spec);
    int N = dimension(o.spec);
    check(ffc_algebra_create(c, N, o.spec.level.empty() ? nullptr : o.spec.level.c_str(), &a.h));
    char* d = nullptr;
    check(ffc_algebra_describe(a.h, &d));
    desc = take(d);
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    for (auto& s : v) out.push_back(s.c_str());
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& verb, Opts& o) {
    json algebra = nullptr, params = json::object(), payload;
    std::optional<bool> verdict;
    char* s = nullptr;
    int pass = 0;
    Handle a;

    if (o.m) params["m"] = o.m;
    if (verb == "phi") {
        if (!o.m) throw Usage("--m is required");
        open_algebra(o, a, algebra);
        check(ffc_phi(a.h, o.m, &s));
    } else if (verb == "pfaffian") {
        open_algebra(o, a, algebra);
        check(ffc_pfaffian(a.h, &s));
    } else if (verb == "verify") {
        open_algebra(o, a, algebra);
        params["what"] = o.what;
        if (o.what == "ss") {
            if (!o.m) throw Usage("--m is required");
            check(ffc_verify_ss(a.h, o.m, &pass, &s));
        } else {
            check(ffc_verify_pfaffian(a.h, &pass, &s));
        }
        verdict = pass != 0;
    } else if (verb == "hc") {
        if (!o.m) throw Usage("--m is required");
        ffc_case c = case_of(o.spec);
        int N = dimension(o.spec);
        algebra = {{"case", c == FFC_ORTHOGONAL ? "orthogonal" : "symplectic"}, {"N", N}};
        check(ffc_hc_leading(c, N, o.m, &s));
    } else if (verb == "gaudin") {
        if (o.manifest.empty()) throw Usage("--manifest is required");
        std::string text = read_file(o.manifest);
        check(ffc_gaudin(text.c_str(), &pass, &s));
        verdict = pass != 0;
    } else if (verb == "soa") {
        open_algebra(o, a, algebra);
        auto b = c_strings(o.B);
        check(ffc_shift_of_argument(a.h, b.data(), static_cast<int>(b.size()), &pass, &s));
        verdict = pass != 0;
    } else if (verb == "yangian") {
        if (!o.m) throw Usage("--m is required");
        open_algebra(o, a, algebra);
        params["order"] = o.order;
        params["bound"] = o.bound;
        auto b = c_strings(o.B);
        check(ffc_yangian(a.h, o.m, o.order, o.bound, b.data(), static_cast<int>(b.size()), &pass, &s));
        verdict = pass != 0;
    } else if (verb == "brauer-check") {
        if (!o.m) o.m = 5;
        params["m"] = o.m;
        check(ffc_brauer_check(o.m, &pass, &s));
        verdict = pass != 0;
    }
    payload = take(s);
    if (verb == "gaudin") algebra = {{"case", payload.at("case")}, {"N", payload.at("N")}};

    json doc = {{"schema", "ffcenter/1"}, {"algebra", algebra}, {"parameters", params}, {"payload", payload}};
    std::string text = doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw Usage("cannot write " + o.out);
        f << text;
        if (verdict) std::cout << json{{"verb", verb}, {"pass", *verdict}, {"out", o.out}}.dump() << "\n";
    }
    return verdict && !*verdict ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Segal-Sugawara vectors for o_N and sp_N and commutative subalgebra checks"};
    app.require_subcommand(1);
    Opts o;

    auto* phi = app.add_subcommand("phi", "phi_{mk} as a polynomial in tau");
    add_algebra(phi, o, true);
    phi->add_option("--m", o.m)->check(CLI::PositiveNumber);

    auto* pf = app.add_subcommand("pfaffian", "noncommutative Pfaffian, even orthogonal");
    add_algebra(pf, o, true);

    auto* ver = app.add_subcommand("verify", "annihilation check in the vacuum module");
    ver->add_option("what", o.what, "ss or pfaffian")->required()->check(CLI::IsMember({"ss", "pfaffian"}));
    add_algebra(ver, o, true);
    ver->add_option("--m", o.m)->check(CLI::PositiveNumber);

    auto* hc = app.add_subcommand("hc", "leading term of the characteristic map");
    add_algebra(hc, o, false);
    hc->add_option("--m", o.m)->check(CLI::PositiveNumber);

    auto* gd = app.add_subcommand("gaudin", "Gaudin Hamiltonians on evaluation modules");
    gd->add_option("--manifest", o.manifest, "JSON module manifest")->check(CLI::ExistingFile);

    auto* soa = app.add_subcommand("soa", "shift-of-argument generators");
    add_algebra(soa, o, false);
    soa->add_option("--B", o.B, "diagonal entries b_1..b_n")->delimiter(',');

    auto* yg = app.add_subcommand("yangian", "graded comparison and bounded commutativity");
    add_algebra(yg, o, false);
    yg->add_option("--m", o.m)->check(CLI::PositiveNumber);
    yg->add_option("--order", o.order)->check(CLI::PositiveNumber);
    yg->add_option("--bound", o.bound)->check(CLI::NonNegativeNumber);
    yg->add_option("--B", o.B, "diagonal entries b_1..b_n")->delimiter(',');

    auto* bc = app.add_subcommand("brauer-check", "symmetrizer identities up to m");
    bc->add_option("--m", o.m)->check(CLI::PositiveNumber);

    for (auto* sub : {phi, pf, ver, hc, gd, soa, yg, bc}) sub->add_option("--out", o.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    std::string verb = app.get_subcommands().front()->get_name();
    try {
        return run(verb, o);
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
