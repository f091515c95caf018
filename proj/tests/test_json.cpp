#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/json_io.hpp"
#include "riordan/presets.hpp"

using namespace riordan;

namespace {
const Poly X = Poly::variable(Var::x);
}

TEST_CASE("polynomial terms serialize in canonical order with string rationals") {
    Poly p = Rat(1, 2) * X.pow(2) + Poly(-3);
    json j = to_json(p);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == json::parse(R"({"c":["-3","1"],"m":{}})"));
    CHECK(j[1] == json::parse(R"({"c":["1","2"],"m":{"x":2}})"));
    CHECK(poly_from_json(j) == p);
    CHECK(to_json(Poly()) == json::array());
}

TEST_CASE("fraction schema") {
    Frac f(Poly(1), Poly(1) + X);
    json j = to_json(f);
    CHECK(j.contains("num"));
    CHECK(j.contains("den"));
    CHECK(frac_from_json(j) == f);
}

TEST_CASE("series schema carries the egf block when polynomial") {
    Series g = eulerian_array(Frac(1), Frac(X), 4).g;
    json j = to_json(g);
    CHECK(j.at("order") == 4);
    CHECK(j.at("coeffs").size() == 5);
    REQUIRE(j.contains("egf"));
    CHECK(poly_from_json(j.at("egf").at(3)) == Poly(1) + Rat(4) * X + X.pow(2));

    // Non-polynomial EGF coefficients suppress the block.
    Series weird = Series::from_coeffs({Frac(Poly(1), Poly(1) + X)});
    CHECK(!to_json(weird).contains("egf"));
}

TEST_CASE("matrix schema round-trips") {
    LTMatrix m = er_expand(eulerian_array(Frac(1), Frac(X), 5), 5);
    json j = to_json(m);
    CHECK(j.at("size") == 5);
    Matrix back = matrix_from_json(j);
    CHECK(back == m.dense());
}
