#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <variant>

#include "riordan/er_array.hpp"
#include "riordan/presets.hpp"

using namespace riordan;

namespace {

const Poly X = Poly::variable(Var::x);
const Poly AL = Poly::variable(Var::alpha);
const Poly BE = Poly::variable(Var::beta);

Frac fx(const Poly& p) { return Frac(p); }

ERArray eulerian_x(int order) { return eulerian_array(Frac(1), Frac(X), order); }
ERArray shifted_x(int order) { return shifted_eulerian_array(Frac(1), Frac(X), order); }

struct Rng {
    std::uint64_t state = 0xb5297a4d3f84d5b5ULL;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Monic random array with small polynomial coefficients in x.
ERArray random_er_array(Rng& rng, int order) {
    Series g(order), f(order);
    g.set_coeff(0, Frac(1));
    f.set_coeff(1, Frac(1));
    for (int i = 1; i <= order; ++i) {
        Poly pg = Poly(Rat(rng.range(-2, 2))) + Rat(rng.range(-1, 1)) * X;
        g.set_coeff(i, Frac(pg));
        if (i >= 2) {
            Poly pf = Poly(Rat(rng.range(-2, 2))) + Rat(rng.range(-1, 1)) * X;
            f.set_coeff(i, Frac(pf));
        }
    }
    return ERArray(std::move(g), std::move(f));
}

}  // namespace

TEST_CASE("er_expand of the classic arrays") {
    // [e^t, t] is the binomial matrix
    LTMatrix b = er_expand(binomial_array(8), 8);
    for (int n = 0; n < 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(b.at(n, k) == Frac(Rat::binomial(n, k)));

    // [1/(1-t), t/(1-t)] has entries C(n,k) n!/k!
    LTMatrix l = er_expand(laguerre_like_array(7), 7);
    for (int n = 0; n < 7; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(l.at(n, k) == Frac(Rat(Int::binomial(n, k) * Int::factorial(n), Int::factorial(k))));

    // First column of the Eulerian array carries the Eulerian polynomials.
    LTMatrix e = er_expand(eulerian_x(5), 5);
    CHECK(e.at(0, 0) == Frac(1));
    CHECK(e.at(1, 0) == Frac(1));
    CHECK(e.at(2, 0) == fx(Poly(1) + X));
    CHECK(e.at(3, 0) == fx(Poly(1) + Rat(4) * X + X.pow(2)));
    CHECK(e.at(4, 0) == fx(Poly(1) + Rat(11) * X + Rat(11) * X.pow(2) + X.pow(3)));

    CHECK_THROWS_AS(er_expand(binomial_array(4), 6), TruncationTooShort);
}

TEST_CASE("er_multiply is the matrix product") {
    // [e^t,t].[e^t,t] = [e^{2t},t]
    ERArray sq = er_multiply(binomial_array(8), binomial_array(8));
    Series e2t = exp_linear(Frac(2), 8);
    CHECK(sq.g == e2t);
    CHECK(sq.f == Series::identity(8));

    // identity law
    ERArray e = eulerian_x(6);
    ERArray prod = er_multiply(e, ERArray::group_identity(6));
    CHECK(prod.g == e.g);
    CHECK(prod.f == e.f);

    // homomorphism against the exact matrix-product oracle
    Rng rng;
    for (int trial = 0; trial < 6; ++trial) {
        ERArray a = random_er_array(rng, 6);
        ERArray b = random_er_array(rng, 6);
        LTMatrix lhs = er_expand(er_multiply(a, b), 6);
        Matrix rhs = er_expand(a, 6).dense() * er_expand(b, 6).dense();
        CHECK(lhs.dense() == rhs);
    }
}

TEST_CASE("er_inverse") {
    // [e^t,t]^{-1} = [e^{-t},t]
    ERArray binv = er_inverse(binomial_array(8));
    CHECK(binv.g == exp_linear(Frac(-1), 8));
    CHECK(binv.f == Series::identity(8));

    // Eulerian inverse: [1/(1+t), (1/(1-x)) ln((1+t)/(1+xt))]
    int N = 8;
    ERArray inv = er_inverse(eulerian_x(N));
    Series expect_g = Series::from_rational(Frac(Poly(1), Poly(1) + Poly::variable(Var::t)), N);
    CHECK(inv.g == expect_g);
    Series log1 = (Series::one(N) + Series::identity(N)).log();
    Series log2 = (Series::one(N) + Series::identity(N) * fx(X)).log();
    CHECK(inv.f == (log1 - log2) * Frac(Poly(1), Poly(1) - X));

    // Expansion of the inverse begins as in the three-term-recurrence rows.
    LTMatrix m = er_expand(inv, 4);
    CHECK(m.at(1, 0) == Frac(-1));
    CHECK(m.at(2, 0) == Frac(2));
    CHECK(m.at(2, 1) == fx(-X - Poly(3)));
    CHECK(m.at(3, 0) == Frac(-6));
    CHECK(m.at(3, 1) == fx(Rat(2) * X.pow(2) + Rat(5) * X + Poly(11)));
    CHECK(m.at(3, 2) == fx(Rat(-3) * X - Poly(6)));
    CHECK(m.at(3, 3) == Frac(1));

    // Shifted family inverse: [1/((1+t)(1+xt)), same f], row 3 from the
    // displayed matrix.
    ERArray sinv = er_inverse(shifted_x(N));
    Series expect_sg = Series::from_rational(
        Frac(Poly(1), (Poly(1) + Poly::variable(Var::t)) * (Poly(1) + X * Poly::variable(Var::t))), N - 1);
    CHECK(Series::agree_to(sinv.g, expect_sg, N - 1));
    LTMatrix sm = er_expand(sinv, 4);
    CHECK(sm.at(1, 0) == fx(-X - Poly(1)));
    CHECK(sm.at(2, 0) == fx(Rat(2) * X.pow(2) + Rat(2) * X + Poly(2)));
    CHECK(sm.at(2, 1) == fx(Rat(-3) * X - Poly(3)));
    CHECK(sm.at(3, 0) == fx(Rat(-6) * (X.pow(3) + X.pow(2) + X + Poly(1))));
    CHECK(sm.at(3, 1) == fx(Rat(11) * X.pow(2) + Rat(14) * X + Poly(11)));
    CHECK(sm.at(3, 2) == fx(Rat(-6) * X - Poly(6)));

    // a . a^{-1} expands to the identity
    Rng rng;
    for (int trial = 0; trial < 4; ++trial) {
        ERArray a = random_er_array(rng, 6);
        Matrix prod = er_expand(a, 6).dense() * er_expand(er_inverse(a), 6).dense();
        CHECK(prod == Matrix::identity(6));
    }
}

TEST_CASE("production_analytic: A and Z closed forms") {
    ERArray gen = eulerian_array(Frac(AL), Frac(BE), 10);
    ProductionData pd = production_analytic(gen, 6);
    // A(t) = 1 + (alpha+beta) t + alpha beta t^2
    CHECK(pd.A.coeff(0) == Frac(1));
    CHECK(pd.A.coeff(1) == fx(AL + BE));
    CHECK(pd.A.coeff(2) == fx(AL * BE));
    for (int i = 3; i <= pd.A.order(); ++i) CHECK(pd.A.coeff(i) == Frac(0));
    // Z(t) = alpha + alpha beta t
    CHECK(pd.Z.coeff(0) == fx(AL));
    CHECK(pd.Z.coeff(1) == fx(AL * BE));
    for (int i = 2; i <= pd.Z.order(); ++i) CHECK(pd.Z.coeff(i) == Frac(0));

    // Production matrix prefix, symbolic in alpha and beta.
    const auto& P = pd.P;
    CHECK(P.at(0, 0) == fx(AL));
    CHECK(P.at(0, 1) == Frac(1));
    CHECK(P.at(1, 0) == fx(AL * BE));
    CHECK(P.at(1, 1) == fx(Rat(2) * AL + BE));
    CHECK(P.at(1, 2) == Frac(1));
    CHECK(P.at(2, 0) == Frac(0));
    CHECK(P.at(2, 1) == fx(Rat(4) * AL * BE));
    CHECK(P.at(2, 2) == fx(Rat(3) * AL + Rat(2) * BE));
    CHECK(P.at(3, 2) == fx(Rat(9) * AL * BE));
    CHECK(P.at(3, 3) == fx(Rat(4) * AL + Rat(3) * BE));

    // Shifted family: Z = (alpha+beta) + 2 alpha beta t.
    ERArray sh = shifted_eulerian_array(Frac(AL), Frac(BE), 10);
    ProductionData sd = production_analytic(sh, 5);
    CHECK(sd.Z.coeff(0) == fx(AL + BE));
    CHECK(sd.Z.coeff(1) == fx(Rat(2) * AL * BE));
    for (int i = 2; i <= sd.Z.order(); ++i) CHECK(sd.Z.coeff(i) == Frac(0));
    CHECK(sd.P.at(0, 0) == fx(AL + BE));
    CHECK(sd.P.at(1, 0) == fx(Rat(2) * AL * BE));
    CHECK(sd.P.at(1, 1) == fx(Rat(2) * (AL + BE)));
    CHECK(sd.P.at(2, 1) == fx(Rat(6) * AL * BE));
    CHECK(sd.P.at(2, 2) == fx(Rat(3) * (AL + BE)));
    CHECK(sd.P.at(3, 2) == fx(Rat(12) * AL * BE));
    CHECK(sd.P.at(3, 3) == fx(Rat(4) * (AL + BE)));
}

TEST_CASE("production_numeric agrees with the analytic route") {
    // Binomial matrix: ones on the diagonal and superdiagonal.
    ProductionMatrix pb = production_numeric(er_expand(binomial_array(8), 7));
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            Frac expect = (c == r || c == r + 1) ? Frac(1) : Frac(0);
            CHECK(pb.at(r, c) == expect);
        }
    ProductionData pda = production_analytic(binomial_array(8), 6);
    CHECK(pb == pda.P);

    // Identity array: pure shift.
    ProductionMatrix ps = production_numeric(LTMatrix::identity(5));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(ps.at(r, c) == ((c == r + 1) ? Frac(1) : Frac(0)));

    // Eulerian size-7 expansion: first six rows of the displayed production
    // matrix (alpha = 1, beta = x).
    ProductionMatrix pe = production_numeric(er_expand(eulerian_x(8), 7));
    for (int n = 0; n < 6; ++n) {
        CHECK(pe.at(n, n) == fx(Poly(n + 1) + Rat(n) * X));
        if (n >= 1) CHECK(pe.at(n, n - 1) == fx(Rat(static_cast<long>(n) * n) * X));
        if (n + 1 < 6) CHECK(pe.at(n, n + 1) == Frac(1));
        for (int c = 0; c < 6; ++c)
            if (c < n - 1 || c > n + 1) CHECK(pe.at(n, c) == Frac(0));
    }

    // Both routes agree on every family, symbolically.
    auto agree = [](const ERArray& arr, int size) {
        ProductionMatrix num = production_numeric(er_expand(arr, size + 1));
        ProductionData ana = production_analytic(arr, size);
        return num == ana.P;
    };
    CHECK(agree(eulerian_array(Frac(AL), Frac(BE), 10), 8));
    CHECK(agree(shifted_eulerian_array(Frac(AL), Frac(BE), 10), 8));
    CHECK(agree(degenerate_plain_array(Frac::variable(Var::alpha), 9), 8));
    CHECK(agree(degenerate_shifted_array(Frac::variable(Var::alpha), 9), 8));
    CHECK(agree(laguerre_like_array(9), 8));
}

TEST_CASE("array regenerates from its production matrix") {
    ERArray e = eulerian_x(9);
    ProductionData pd = production_analytic(e, 8);
    LTMatrix regen = matrix_from_production(pd.P, 8);
    CHECK(regen == er_expand(e, 8));
}

TEST_CASE("detect_tridiagonal") {
    ERArray e = eulerian_x(9);
    auto res = detect_tridiagonal(production_analytic(e, 7).P);
    REQUIRE(std::holds_alternative<JacobiParams>(res));
    const auto& j = std::get<JacobiParams>(res);
    for (int n = 0; n < 7; ++n) CHECK(j.a[n] == fx(Poly(n + 1) + Rat(n) * X));
    for (int n = 1; n < 7; ++n) CHECK(j.lam[n - 1] == fx(Rat(static_cast<long>(n) * n) * X));

    auto sres = detect_tridiagonal(production_analytic(shifted_x(9), 7).P);
    REQUIRE(std::holds_alternative<JacobiParams>(sres));
    const auto& sj = std::get<JacobiParams>(sres);
    for (int n = 0; n < 7; ++n) CHECK(sj.a[n] == fx(Rat(n + 1) * (Poly(1) + X)));
    for (int n = 1; n < 7; ++n)
        CHECK(sj.lam[n - 1] == fx(Rat(static_cast<long>(n) * (n + 1)) * X));

    // Hand-built 4x4 with a stray entry at (3,0).
    Matrix bad = Matrix::identity(4);
    for (int i = 0; i + 1 < 4; ++i) bad.at(i, i + 1) = Frac(1);
    bad.at(3, 0) = Frac(5);
    auto nres = detect_tridiagonal(ProductionMatrix(std::move(bad)));
    REQUIRE(std::holds_alternative<NotTridiagonal>(nres));
    CHECK(std::get<NotTridiagonal>(nres).row == 3);
    CHECK(std::get<NotTridiagonal>(nres).col == 0);
    CHECK(std::get<NotTridiagonal>(nres).value == Frac(5));

    // A real array whose production matrix leaves the band: [1, t + t^3].
    Series f = Series::identity(8);
    f.set_coeff(3, Frac(1));
    ERArray cubic(Series::one(8), f);
    auto cres = detect_tridiagonal(production_analytic(cubic, 6).P);
    REQUIRE(std::holds_alternative<NotTridiagonal>(cres));
}

TEST_CASE("row sums") {
    // [e^t,t]: EGF e^{2t}, values 2^n.
    Series rs = row_sums_egf(binomial_array(8));
    CHECK(rs == exp_linear(Frac(2), 8));

    // [1,t]: EGF e^t, values all 1.
    Series ones = row_sums_egf(ERArray(Series::one(8), Series::identity(8)));
    for (int n = 0; n <= 8; ++n) CHECK(ones.egf_coeff(n) == Frac(1));

    // Eulerian array at x = 2: row sums match the expanded matrix.
    ERArray e2 = eulerian_array(Frac(1), Frac(2), 6);
    Series rs2 = row_sums_egf(e2);
    LTMatrix m = er_expand(e2, 5);
    for (int n = 0; n < 5; ++n) {
        Frac acc;
        for (int k = 0; k <= n; ++k) acc += m.at(n, k);
        CHECK(rs2.egf_coeff(n) == acc);
    }
}

TEST_CASE("moment property: first column equals Jacobi moments") {
    ERArray e = eulerian_x(9);
    auto res = detect_tridiagonal(production_numeric(er_expand(e, 9)));
    REQUIRE(std::holds_alternative<JacobiParams>(res));
    MomentSeq mu = moments_from_jacobi(std::get<JacobiParams>(res), 8);
    LTMatrix m = er_expand(e, 8);
    for (int n = 0; n < 8; ++n) CHECK(mu.at(n) == m.at(n, 0));
}

TEST_CASE("non-monic arrays are flagged but functional") {
    Series g = Series::one(6) * Frac(2);
    ERArray a(g, Series::identity(6));
    CHECK(!a.monic());
    CHECK(er_expand(a, 3).at(0, 0) == Frac(2));
    CHECK(binomial_array(6).monic());
}
