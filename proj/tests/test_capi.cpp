#include <doctest.h>

#include <string>

#include <json.hpp>

#include "ffcenter/ffcenter.h"

using json = nlohmann::json;

namespace {

json take(char* s) {
    REQUIRE(s);
    json j = json::parse(s);
    ffc_string_free(s);
    return j;
}

struct Alg {
    ffc_algebra* h = nullptr;
    Alg(ffc_case c, int N, const char* level = nullptr) { REQUIRE(ffc_algebra_create(c, N, level, &h) == FFC_OK); }
    ~Alg() { ffc_algebra_destroy(h); }
};

}  // namespace

TEST_CASE("handles and errors") {
    ffc_algebra* h = nullptr;
    CHECK(ffc_algebra_create(FFC_SYMPLECTIC, 5, nullptr, &h) == FFC_INVALID_ARGUMENT);
    CHECK(h == nullptr);
    CHECK(std::string(ffc_last_error_message()).find("even") != std::string::npos);
    CHECK(ffc_algebra_create(FFC_ORTHOGONAL, 3, "1/0", &h) != FFC_OK);
    CHECK(ffc_algebra_create(FFC_ORTHOGONAL, 40, nullptr, &h) == FFC_INVALID_ARGUMENT);
    char* s = nullptr;
    CHECK(ffc_phi(nullptr, 2, &s) == FFC_INVALID_ARGUMENT);
    CHECK(s == nullptr);

    Alg o3(FFC_ORTHOGONAL, 3);
    CHECK(ffc_algebra_describe(o3.h, &s) == FFC_OK);
    json d = take(s);
    CHECK(d["case"] == "orthogonal");
    CHECK(d["level"] == "-1/1");
    CHECK(std::string(ffc_last_error_message()).empty());
    CHECK(ffc_pfaffian(o3.h, &s) == FFC_INVALID_ARGUMENT);
    CHECK(ffc_phi(o3.h, 0, &s) == FFC_OUT_OF_RANGE);
    CHECK(std::string(ffc_status_name(FFC_DOMAIN_ERROR)) == "domain error");
}

TEST_CASE("phi payload") {
    Alg o3(FFC_ORTHOGONAL, 3);
    char* s = nullptr;
    REQUIRE(ffc_phi(o3.h, 2, &s) == FFC_OK);
    json t = take(s);
    REQUIRE(t.size() == 3);
    CHECK(t[0]["tauDegree"] == 0);
    // phi_{20} is tr S^(2) = 5
    CHECK(t[2]["terms"] == json::parse(R"([{"coeff":"5/1","monomial":[]}])"));
    CHECK(t[1]["terms"].empty());
    CHECK(!t[0]["terms"].empty());
    REQUIRE(ffc_phi(o3.h, 2, &s) == FFC_OK);
    CHECK(take(s) == t);
}

TEST_CASE("verification calls") {
    int pass = -1;
    char* s = nullptr;
    Alg sp4(FFC_SYMPLECTIC, 4);
    REQUIRE(ffc_verify_ss(sp4.h, 4, &pass, &s) == FFC_OK);
    CHECK(pass == 1);
    json r = take(s);
    CHECK(r["elements"].size() == 5);

    Alg o3(FFC_ORTHOGONAL, 3, "0");
    REQUIRE(ffc_verify_ss(o3.h, 2, &pass, &s) == FFC_OK);
    CHECK(pass == 0);
    r = take(s);
    CHECK(r["elements"][0]["pass"] == true);
    CHECK(r["elements"][2]["pass"] == false);
    CHECK(!r["elements"][2]["failures"].empty());

    Alg o4(FFC_ORTHOGONAL, 4);
    REQUIRE(ffc_verify_pfaffian(o4.h, &pass, &s) == FFC_OK);
    CHECK(pass == 1);
    take(s);

    REQUIRE(ffc_brauer_check(3, &pass, &s) == FFC_OK);
    CHECK(pass == 1);
    CHECK(take(s)["results"].size() == 3);
}

TEST_CASE("leading terms payload") {
    char* s = nullptr;
    REQUIRE(ffc_hc_leading(FFC_ORTHOGONAL, 3, 2, &s) == FFC_OK);
    CHECK(take(s)["trace"] == json::parse(R"([{"coeff":"5/3","monomial":[["h1^2",1]]}])"));
    REQUIRE(ffc_hc_leading(FFC_SYMPLECTIC, 4, 4, &s) == FFC_OK);
    json j = take(s);
    CHECK(j["trace"].is_null());
    CHECK(j["normalized"] == json::parse(R"([{"coeff":"1/1","monomial":[["h1^2",1],["h2^2",1]]}])"));
    CHECK(ffc_hc_leading(FFC_SYMPLECTIC, 4, 9, &s) == FFC_OUT_OF_RANGE);
}

TEST_CASE("gaudin manifest") {
    int pass = -1;
    char* s = nullptr;
    const char* man = R"({"algebra":"o","N":3,"B":["1/2"],"modules":[{"type":"vector","point":0},{"type":"vector","point":"1"}],"m":2,"order":3})";
    REQUIRE(ffc_gaudin(man, &pass, &s) == FFC_OK);
    CHECK(pass == 1);
    json g = take(s);
    CHECK(g["dimension"] == 9);
    CHECK(g["coefficients"].size() == 12);
    CHECK(ffc_gaudin(R"({"algebra":"o","N":3,"modules":[{"point":1},{"point":1}],"m":2,"order":2})", &pass, &s) == FFC_INVALID_ARGUMENT);
    CHECK(ffc_gaudin("not json", &pass, &s) == FFC_INVALID_ARGUMENT);
}

TEST_CASE("shift of argument and yangian") {
    int pass = -1;
    char* s = nullptr;
    Alg o4(FFC_ORTHOGONAL, 4);
    REQUIRE(ffc_shift_of_argument(o4.h, nullptr, 0, &pass, &s) == FFC_OK);
    CHECK(pass == 1);
    json j = take(s);
    CHECK(j["generators"].size() == 4);
    CHECK(j["B"] == json::parse(R"(["1/2","1/1"])"));
    const char* bad[] = {"1"};
    CHECK(ffc_shift_of_argument(o4.h, bad, 1, &pass, &s) == FFC_INVALID_ARGUMENT);

    Alg o3(FFC_ORTHOGONAL, 3);
    REQUIRE(ffc_yangian(o3.h, 2, 2, 1, nullptr, 0, &pass, &s) == FFC_OK);
    CHECK(pass == 1);
    j = take(s);
    CHECK(j["kappa"] == "1/2");
    CHECK(j["graded"]["pass"] == true);
}
