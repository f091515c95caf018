#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdint>
#include <vector>

#include "riordan/fraction.hpp"
#include "riordan/integer.hpp"
#include "riordan/polynomial.hpp"
#include "riordan/rational.hpp"

using namespace riordan;

namespace {

// Small deterministic generator for the property checks.
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Rat random_rat(Rng& rng) {
    long num = rng.range(-9, 9);
    long den = rng.range(1, 9);
    return Rat(num, den);
}

Poly random_poly_in_x(Rng& rng, int max_deg) {
    Poly p;
    for (int d = 0; d <= max_deg; ++d) {
        long c = rng.range(-4, 4);
        if (c == 0) continue;
        Monomial m;
        m.exp[static_cast<int>(Var::x)] = d;
        p += Poly::term(Rat(c), m);
    }
    return p;
}

const Poly X = Poly::variable(Var::x);
const Poly A = Poly::variable(Var::alpha);
const Poly B = Poly::variable(Var::beta);

}  // namespace

TEST_CASE("Int basics and big values") {
    CHECK(Int(0).is_zero());
    CHECK(Int("-12").to_string() == "-12");
    CHECK((Int(7) + Int(-9)).to_string() == "-2");
    CHECK((Int(123456789L) * Int(987654321L)).to_string() == "121932631112635269");
    CHECK(Int::factorial(20).to_string() == "2432902008176640000");
    CHECK(Int::factorial(25).to_string() == "15511210043330985984000000");
    CHECK(Int::binomial(52, 5).to_string() == "2598960");
    CHECK(Int::pow(Int(-3), 5) == Int(-243));
    CHECK(Int::gcd(Int(252), Int(-105)) == Int(21));
    CHECK_THROWS_AS(Int(1) / Int(0), DivisionByZero);
    CHECK_THROWS_AS(Int("12a"), std::invalid_argument);

    // Truncated division semantics, cross-checked against builtin integers.
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        long a = rng.range(-100000, 100000);
        long b = rng.range(-500, 500);
        if (b == 0) continue;
        CHECK(Int(a) / Int(b) == Int(a / b));
        CHECK(Int(a) % Int(b) == Int(a % b));
    }
}

TEST_CASE("Rat canonical form and arithmetic") {
    Rat r(6, -4);
    CHECK(r.num() == Int(-3));
    CHECK(r.den() == Int(2));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat("-7/21") == Rat(-1, 3));
    CHECK(Rat(5).is_integer());
    CHECK(Rat(0, 7).is_zero());
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
    CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
    CHECK(Rat(-3, 7).to_string() == "-3/7");

    Rng rng;
    for (int i = 0; i < 100; ++i) {
        Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rat(1));
    }
}

TEST_CASE("poly arithmetic examples") {
    // (x+1)*(x+1) = x^2 + 2x + 1
    Poly xp1 = X + Poly(1);
    Poly sq = xp1 * xp1;
    CHECK(sq == X.pow(2) + Rat(2) * X + Poly(1));

    // (alpha - beta) * 0 = 0
    CHECK(((A - B) * Poly()).is_zero());

    // (1 + 4x + x^2) - (1+x)^2 = 2x   (the 2x2 Hankel minor of P1..P3)
    Poly p3 = Poly(1) + Rat(4) * X + X.pow(2);
    CHECK(p3 - sq == Rat(2) * X);
}

TEST_CASE("monomial exponent overflow is a hard error") {
    Poly big = X.pow(1u << 31);
    CHECK(big.degree_in(Var::x) == (1u << 31));
    CHECK_THROWS_AS(big * big, ExponentOverflow);
}

TEST_CASE("poly canonical order gives structural equality") {
    Poly p = X * A + B;
    Poly q = B + A * X;
    CHECK(p == q);
    CHECK(p.terms().size() == 2);
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(Var::x) == 1);
    CHECK(p.str() == "beta+x*alpha");
}

TEST_CASE("poly substitution homomorphism") {
    Rng rng;
    for (int i = 0; i < 40; ++i) {
        Poly p = random_poly_in_x(rng, 3);
        Poly q = random_poly_in_x(rng, 3);
        std::array<Rat, kVarCount> pt{random_rat(rng), random_rat(rng), random_rat(rng),
                                      random_rat(rng)};
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    }
    // Substituting a polynomial commutes with evaluation.
    Poly p = X.pow(2) + A * X + Poly(3);
    Poly val = B + Poly(2);
    std::array<Rat, kVarCount> pt{Rat(0), Rat(5, 2), Rat(-1, 3), Rat(0)};
    auto direct = p.substitute(Var::x, val).evaluate(pt);
    std::array<Rat, kVarCount> pt2 = pt;
    pt2[static_cast<int>(Var::x)] = val.evaluate(pt);
    CHECK(direct == p.evaluate(pt2));
}

TEST_CASE("gcd_univar") {
    // gcd(x^2 - 1, x - 1) = x - 1
    CHECK(gcd_univar(X.pow(2) - Poly(1), X - Poly(1)) == X - Poly(1));
    // gcd(0, 3x) = x after monic normalization
    CHECK(gcd_univar(Poly(), Rat(3) * X) == X);
    // gcd(2x + 2, 4) = 1
    CHECK(gcd_univar(Rat(2) * X + Poly(2), Poly(4)) == Poly(1));
    CHECK(gcd_univar(Poly(), Poly()).is_zero());
    CHECK_THROWS_AS(gcd_univar(X * A, X), MultivariateInput);
    CHECK_THROWS_AS(gcd_univar(X + Poly(1), A), MultivariateInput);
}

TEST_CASE("exact multivariate division") {
    // (alpha^2 - beta^2) / (alpha - beta) = alpha + beta
    auto q = try_divide(A.pow(2) - B.pow(2), A - B);
    REQUIRE(q.has_value());
    CHECK(*q == A + B);
    CHECK(!try_divide(A.pow(2) + B, A - B).has_value());
    CHECK_THROWS_AS(try_divide(A, Poly()), DivisionByZero);
}

TEST_CASE("frac arithmetic examples") {
    Frac one_minus_x(Poly(1) - X);
    // (1/(1-x)) * (1-x) = 1
    CHECK(Frac(Poly(1), Poly(1) - X) * one_minus_x == Frac(1));
    // (alpha^2-beta^2)/(alpha-beta) = alpha+beta, collapsed by normalization
    Frac f(A.pow(2) - B.pow(2), A - B);
    CHECK(f == Frac(A + B));
    CHECK(f.is_polynomial());
    // 1/(1+x) + x/(1+x) = 1
    Frac g = Frac(Poly(1), Poly(1) + X) + Frac(X, Poly(1) + X);
    CHECK(g == Frac(1));
    CHECK_THROWS_AS(Frac(1) / Frac(0), DivisionByZero);
    CHECK_THROWS_AS(Frac(X, Poly()), DivisionByZero);
}

TEST_CASE("frac univariate canonicalization") {
    // (x^2-1)/(2x-2) reduces to (x+1)/2 with monic denominator handling
    Frac f(X.pow(2) - Poly(1), Rat(2) * X - Poly(2));
    CHECK(f.is_polynomial());
    CHECK(f.num() == Rat(1, 2) * X + Poly(Rat(1, 2)));
    // Canonicalization is idempotent: rebuilding from parts changes nothing.
    Frac g(f.num(), f.den());
    CHECK(g.num() == f.num());
    CHECK(g.den() == f.den());
    // Non-monic denominator becomes monic.
    Frac h(Poly(1), Rat(3) * X + Poly(3));
    CHECK(h.den() == X + Poly(1));
    CHECK(h.num() == Poly(Rat(1, 3)));
}

TEST_CASE("frac cross-multiplication equality for unreduced multivariate") {
    // (alpha*x)/(alpha) vs x: multivariate path may or may not collapse, but
    // equality must hold regardless.
    Frac f(A * X, A);
    CHECK(f == Frac(X));
    Frac g(A * X + X, A + Poly(1));
    CHECK(g == Frac(X));
}

TEST_CASE("frac field axioms, random univariate fractions") {
    Rng rng;
    int tested = 0;
    for (int i = 0; i < 60; ++i) {
        Frac a(random_poly_in_x(rng, 2), random_poly_in_x(rng, 1) + Poly(1));
        Frac b(random_poly_in_x(rng, 2), random_poly_in_x(rng, 2) + Poly(2));
        Frac c(random_poly_in_x(rng, 1), Poly(1));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Frac(1));
            ++tested;
        }
        // Canonicalization is idempotent: renormalizing a normalized value
        // reproduces it structurally.
        Frac renorm(a.num(), a.den());
        CHECK(renorm.num() == a.num());
        CHECK(renorm.den() == a.den());
    }
    CHECK(tested > 10);
}

TEST_CASE("frac evaluation and substitution") {
    Frac f(A.pow(2) - B.pow(2), A - B);
    Frac spec = f.substitute(Var::alpha, Poly(1)).substitute(Var::beta, X);
    CHECK(spec == Frac(Poly(1) + X));
    std::array<Rat, kVarCount> pt{Rat(3), Rat(0), Rat(0), Rat(0)};
    CHECK(spec.evaluate(pt) == Rat(4));
    Frac bad(Poly(1), Poly(1) - X);
    std::array<Rat, kVarCount> pole{Rat(1), Rat(0), Rat(0), Rat(0)};
    CHECK_THROWS_AS(bad.evaluate(pole), DivisionByZero);
}
