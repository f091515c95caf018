#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "riordan/er_array.hpp"
#include "riordan/eulerian.hpp"
#include "riordan/presets.hpp"

namespace riordan {

// Verification suites runnable from the CLI (and exercised by CI).  Each
// check either passes or fails with a witness naming the first offending
// index or entry.  A fault can be injected at one of three well-defined
// construction sites to prove the checks actually bite:
//   lambda:<n>            adds 1 to lambda_n of the Eulerian recurrence data
//   triangle:<K>:<n>:<k>  adds 1 to entry (n,k) of triangle K's recurrence table
//   f-cubic               adds 1 to the t^3 coefficient of the Eulerian f
struct FaultInjection {
    enum class Site { none, lambda, triangle, f_cubic };
    Site site = Site::none;
    eulerian::TriangleKind kind = eulerian::TriangleKind::W;
    int n = 0;
    int k = 0;

    static FaultInjection parse(const std::string& spec) {
        FaultInjection f;
        if (spec.empty() || spec == "none") return f;
        std::istringstream in(spec);
        std::string head;
        std::getline(in, head, ':');
        if (head == "lambda") {
            f.site = Site::lambda;
            if (!(in >> f.n) || f.n < 1) throw std::invalid_argument("lambda fault needs an index >= 1");
            return f;
        }
        if (head == "f-cubic") {
            f.site = Site::f_cubic;
            return f;
        }
        if (head == "triangle") {
            f.site = Site::triangle;
            std::string kind;
            std::getline(in, kind, ':');
            f.kind = eulerian::triangle_kind_by_name(kind);
            char sep = 0;
            if (!(in >> f.n >> sep >> f.k) || sep != ':' || f.n < 0 || f.k < 0 || f.k > f.n)
                throw std::invalid_argument("triangle fault needs n:k with 0 <= k <= n");
            return f;
        }
        throw std::invalid_argument("unknown fault site: " + head);
    }
};

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;  // empty on pass
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace verify_detail {

using eulerian::TriangleKind;

// Construction sites shared by the checks; faults land here.
struct Ctx {
    FaultInjection fault;

    JacobiParams jac_eulerian(int count) const {
        JacobiParams j = eulerian_jacobi(Frac(1), Frac(Poly::variable(Var::x)), count);
        if (fault.site == FaultInjection::Site::lambda && fault.n >= 1 &&
            static_cast<std::size_t>(fault.n) <= j.lam.size())
            j.lam[fault.n - 1] += Frac(1);
        return j;
    }

    JacobiParams jac_shifted(int count) const {
        return shifted_eulerian_jacobi(Frac(1), Frac(Poly::variable(Var::x)), count);
    }

    std::vector<std::vector<Int>> triangle(TriangleKind kind, int max_row) const {
        auto rows = eulerian::triangle_rows(kind, max_row);
        if (fault.site == FaultInjection::Site::triangle && fault.kind == kind &&
            fault.n <= max_row && fault.k <= fault.n)
            rows[fault.n][fault.k] += Int(1);
        return rows;
    }

    ERArray eulerian_arr(int order) const {
        ERArray arr = eulerian_array(Frac(1), Frac(Poly::variable(Var::x)), order);
        if (fault.site == FaultInjection::Site::f_cubic && order >= 3) {
            Series f = arr.f;
            f.set_coeff(3, f.coeff(3) + Frac(1));
            return ERArray(arr.g, std::move(f));
        }
        return arr;
    }

    ERArray shifted_arr(int order) const {
        return shifted_eulerian_array(Frac(1), Frac(Poly::variable(Var::x)), order);
    }
};

using Witness = std::optional<std::string>;
using CheckFn = std::function<Witness(const Ctx&)>;

struct Check {
    std::string id;
    std::vector<std::string> suites;
    CheckFn fn;
};

inline std::string frac_str(const Frac& f) { return f.str(); }

inline Witness pass() { return std::nullopt; }

template <typename... Args>
Witness fail(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

// ---- riordan suite ----------------------------------------------------

inline Witness check_group_homomorphism(const Ctx&) {
    std::uint64_t state = 0x2545f4914f6cdd1dULL;
    auto rnd = [&](long lo, long hi) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return lo + static_cast<long>(state % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const Poly X = Poly::variable(Var::x);
    auto random_arr = [&](int order) {
        Series g(order), f(order);
        g.set_coeff(0, Frac(1));
        f.set_coeff(1, Frac(1));
        for (int i = 1; i <= order; ++i) {
            g.set_coeff(i, Frac(Poly(Rat(rnd(-2, 2))) + Rat(rnd(-1, 1)) * X));
            if (i >= 2) f.set_coeff(i, Frac(Poly(Rat(rnd(-2, 2))) + Rat(rnd(-1, 1)) * X));
        }
        return ERArray(std::move(g), std::move(f));
    };
    for (int trial = 0; trial < 20; ++trial) {
        ERArray a = random_arr(6), b = random_arr(6);
        LTMatrix lhs = er_expand(er_multiply(a, b), 6);
        Matrix rhs = er_expand(a, 6).dense() * er_expand(b, 6).dense();
        if (!(lhs.dense() == rhs)) return fail("homomorphism fails on random pair #", trial);
        Matrix prod = er_expand(a, 6).dense() * er_expand(er_inverse(a), 6).dense();
        if (!prod.is_identity()) return fail("inverse law fails on random array #", trial);
    }
    return pass();
}

inline Witness check_production_equivalence(const Ctx& ctx) {
    struct Item {
        const char* name;
        ERArray arr;
    };
    const Frac a = Frac::variable(Var::alpha);
    const Frac b = Frac::variable(Var::beta);
    std::vector<Item> items;
    items.push_back({"eulerian(alpha,beta)", eulerian_array(a, b, 10)});
    items.push_back({"shifted(alpha,beta)", shifted_eulerian_array(a, b, 10)});
    items.push_back({"eulerian(1,x)", ctx.eulerian_arr(10)});
    items.push_back({"degenerate-plain", degenerate_plain_array(a, 10)});
    items.push_back({"degenerate-shifted", degenerate_shifted_array(a, 10)});
    items.push_back({"binomial", binomial_array(10)});
    for (const auto& item : items) {
        int size = 10;
        ProductionMatrix num = production_numeric(er_expand(item.arr, size + 1));
        ProductionData ana = production_analytic(item.arr, size);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c)
                if (!(num.at(r, c) == ana.P.at(r, c)))
                    return fail(item.name, ": routes disagree at entry (", r, ",", c, ")");
    }
    return pass();
}

inline Witness check_moment_first_column(const Ctx& ctx) {
    int size = 9;
    ERArray arr = ctx.eulerian_arr(size);
    auto det = detect_tridiagonal(production_numeric(er_expand(arr, size)));
    if (std::holds_alternative<NotTridiagonal>(det)) {
        const auto& nt = std::get<NotTridiagonal>(det);
        return fail("production matrix not tridiagonal at (", nt.row, ",", nt.col, ") = ",
                    frac_str(nt.value));
    }
    MomentSeq mu = moments_from_jacobi(std::get<JacobiParams>(det), size - 1);
    LTMatrix m = er_expand(arr, size - 1);
    for (int n = 0; n < size - 1; ++n)
        if (!(mu.at(n) == m.at(n, 0))) return fail("first column differs from moment ", n);
    return pass();
}

inline Witness check_row_sums(const Ctx&) {
    Series rs = row_sums_egf(binomial_array(8));
    for (int n = 0; n <= 8; ++n)
        if (!(rs.egf_coeff(n) == Frac(Rat(Int::pow(Int(2), n)))))
            return fail("binomial row sum ", n, " is not 2^n");
    ERArray e2 = eulerian_array(Frac(1), Frac(2), 6);
    Series rs2 = row_sums_egf(e2);
    LTMatrix m = er_expand(e2, 5);
    for (int n = 0; n < 5; ++n) {
        Frac acc;
        for (int k = 0; k <= n; ++k) acc += m.at(n, k);
        if (!(rs2.egf_coeff(n) == acc)) return fail("row-sum EGF differs from matrix at row ", n);
    }
    return pass();
}

inline Witness check_production_regenerates(const Ctx& ctx) {
    ERArray arr = ctx.eulerian_arr(9);
    ProductionData pd = production_analytic(arr, 8);
    LTMatrix regen = matrix_from_production(pd.P, 8);
    LTMatrix direct = er_expand(arr, 8);
    for (int n = 0; n < 8; ++n)
        for (int k = 0; k <= n; ++k)
            if (!(regen.at(n, k) == direct.at(n, k)))
                return fail("regenerated array differs at (", n, ",", k, ")");
    return pass();
}

// ---- eulerian suite ---------------------------------------------------

inline Witness check_triangle_displays(const Ctx& ctx) {
    const long w5[] = {1, 26, 66, 26, 1, 0};
    const long at5[] = {1, 57, 302, 302, 57, 1};
    const long a3[] = {0, 1, 4, 1};
    auto w = ctx.triangle(TriangleKind::W, 5);
    for (int k = 0; k <= 5; ++k)
        if (!(w[5][k] == Int(w5[k]))) return fail("W(5,", k, ") != ", w5[k]);
    auto at = ctx.triangle(TriangleKind::Atilde, 5);
    for (int k = 0; k <= 5; ++k)
        if (!(at[5][k] == Int(at5[k]))) return fail("Atilde(5,", k, ") != ", at5[k]);
    auto a = ctx.triangle(TriangleKind::A, 3);
    for (int k = 0; k <= 3; ++k)
        if (!(a[3][k] == Int(a3[k]))) return fail("A(3,", k, ") != ", a3[k]);
    return pass();
}

inline Witness check_triangle_crossval(const Ctx& ctx) {
    for (auto kind : {TriangleKind::W, TriangleKind::A, TriangleKind::Atilde}) {
        auto rows = ctx.triangle(kind, 12);
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n; ++k)
                if (!(eulerian::triangle_closed_form(kind, n, k) == rows[n][k]))
                    return fail("closed form and recurrence disagree at ",
                                kind == TriangleKind::W       ? "W"
                                : kind == TriangleKind::A     ? "A"
                                                              : "Atilde",
                                "(", n, ",", k, ")");
    }
    return pass();
}

inline Witness check_poly_fourway(const Ctx& ctx) {
    int count = 10;
    ERArray arr = ctx.eulerian_arr(count);
    LTMatrix m = er_expand(arr, count);
    JacobiParams j = ctx.jac_eulerian(count);
    MomentSeq mu = moments_from_jacobi(j, count);
    Series cf = jfraction_ogf(j, (count + 2) / 2, count);
    for (int n = 0; n < count; ++n) {
        Frac p = Frac(eulerian::poly(n));
        if (!(arr.g.egf_coeff(n) == p)) return fail("EGF route differs from triangle at n=", n);
        if (!(m.at(n, 0) == p)) return fail("first-column route differs from triangle at n=", n);
        if (!(mu.at(n) == p)) return fail("moment route differs from triangle at index ", n);
        if (!(cf.coeff(n) == p)) return fail("J-fraction route differs from triangle at index ", n);
    }
    return pass();
}

inline Witness check_poly_factorial(const Ctx&) {
    for (int n = 0; n <= 10; ++n) {
        std::array<Rat, kVarCount> at_one{Rat(1), Rat(0), Rat(0), Rat(0)};
        if (!(eulerian::poly(n).evaluate(at_one) == Rat(Int::factorial(n))))
            return fail("P_", n, "(1) != ", n, "!");
    }
    return pass();
}

inline Witness check_descending_power(const Ctx& ctx) {
    for (int n = 0; n <= 12; ++n) {
        auto a = ctx.triangle(TriangleKind::A, n);
        Poly sum;
        for (int k = 0; k <= n; ++k) {
            Monomial m;
            m.exp[static_cast<int>(Var::x)] = n - k;
            sum += Poly::term(Rat(a[n][k]), m);
        }
        if (!(sum == eulerian::poly(n))) return fail("descending-power identity fails at n=", n);
    }
    auto at = ctx.triangle(TriangleKind::Atilde, 12);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            if (!(at[n][k] == at[n][n - k])) return fail("Atilde symmetry fails at (", n, ",", k, ")");
    return pass();
}

inline Witness check_general_specializes(const Ctx&) {
    const Poly X = Poly::variable(Var::x);
    for (int n = 0; n <= 8; ++n) {
        Poly spec = eulerian::general_poly(n).substitute(Var::alpha, Poly(1)).substitute(Var::beta, X);
        if (!(spec == eulerian::poly(n))) return fail("specialization differs at n=", n);
    }
    return pass();
}

inline Witness check_euler_identity(const Ctx&) {
    for (int n = 0; n <= 8; ++n)
        if (!eulerian::euler_identity_holds(n, 12)) return fail("identity fails at n=", n);
    return pass();
}

inline Witness check_degenerate_closed_forms(const Ctx&) {
    Frac a = Frac::variable(Var::alpha);
    for (auto variant : {eulerian::DegenerateVariant::plain, eulerian::DegenerateVariant::shifted}) {
        LTMatrix m = eulerian::degenerate_array(variant, a, 9);
        for (int n = 0; n < 9; ++n)
            for (int k = 0; k <= n; ++k)
                if (!(m.at(n, k) == eulerian::degenerate_entry_closed_form(variant, a, n, k)))
                    return fail(variant == eulerian::DegenerateVariant::plain ? "plain" : "shifted",
                                " degenerate entry (", n, ",", k, ") differs from closed form");
    }
    return pass();
}

// ---- moments suite ----------------------------------------------------

inline Witness check_motzkin_vs_power(const Ctx& ctx) {
    JacobiParams j = ctx.jac_eulerian(9);
    MomentSeq mu = moments_from_jacobi(j, 9);
    Matrix p = j.to_matrix(9);
    Matrix acc = Matrix::identity(9);
    for (int n = 0; n < 9; ++n) {
        if (!(mu.at(n) == acc.at(0, 0))) return fail("Motzkin and matrix-power moments differ at ", n);
        acc = acc * p;
    }
    return pass();
}

inline Witness check_moments_plain_family(const Ctx& ctx) {
    int count = 10;
    JacobiParams j = ctx.jac_eulerian(count);
    MomentSeq mu = moments_from_jacobi(j, count);
    for (int n = 0; n < count; ++n)
        if (!(mu.at(n) == Frac(eulerian::poly(n))))
            return fail("moment ", n, " is not P_", n, "(x)");
    return pass();
}

inline Witness check_moments_shifted_family(const Ctx& ctx) {
    int count = 9;
    JacobiParams j = ctx.jac_shifted(count);
    MomentSeq mu = moments_from_jacobi(j, count);
    for (int n = 0; n < count; ++n)
        if (!(mu.at(n) == Frac(eulerian::poly(n + 1))))
            return fail("shifted moment ", n, " is not P_", n + 1, "(x)");
    return pass();
}

inline Witness check_orthopoly_rows(const Ctx& ctx) {
    for (bool shifted : {false, true}) {
        ERArray arr = shifted ? ctx.shifted_arr(9) : ctx.eulerian_arr(9);
        JacobiParams j = shifted ? ctx.jac_shifted(8) : ctx.jac_eulerian(8);
        LTMatrix inv = er_expand(er_inverse(arr), 8);
        for (int n = 0; n < 8; ++n) {
            OrthoPoly p = orthopoly_from_jacobi(j, n);
            for (int k = 0; k <= n; ++k)
                if (!(inv.at(n, k) == p.coeffs[k]))
                    return fail(shifted ? "R" : "Q", "-row ", n, " differs at coefficient ", k);
        }
    }
    return pass();
}

inline Witness check_jfraction_consistency(const Ctx& ctx) {
    for (int depth : {2, 4, 6}) {
        JacobiParams j = ctx.jac_eulerian(depth + 1);
        MomentSeq mu = moments_from_jacobi(ctx.jac_eulerian(2 * depth), 2 * depth);
        Series s = jfraction_ogf(j, depth, 2 * depth - 1);
        for (int n = 0; n <= 2 * depth - 1; ++n)
            if (!(s.coeff(n) == mu.at(n)))
                return fail("depth-", depth, " J-fraction differs from moment ", n);
    }
    return pass();
}

// ---- hankel suite -----------------------------------------------------

inline Witness check_hankel(const Ctx& ctx) {
    const Poly X = Poly::variable(Var::x);
    JacobiParams je = ctx.jac_eulerian(8);
    JacobiParams js = ctx.jac_shifted(8);
    MomentSeq mu = moments_from_jacobi(ctx.jac_eulerian(14), 14);
    MomentSeq smu = moments_from_jacobi(ctx.jac_shifted(14), 14);
    for (int n = 0; n <= 6; ++n) {
        Frac det = hankel_det(mu, n);
        Frac prod = hankel_from_jacobi(je, n);
        // x^{C(n+1,2)} prod k!^2
        Rat c(1);
        for (int k = 1; k <= n; ++k) c *= Rat(Int::factorial(k) * Int::factorial(k));
        Frac closed = Frac(Poly::term(c, Monomial{})) * Frac(X.pow(n * (n + 1) / 2));
        if (!(det == prod)) return fail("determinant and lambda-product differ at n=", n);
        if (!(det == closed)) return fail("Eulerian Hankel closed form fails at n=", n);

        Frac sdet = hankel_det(smu, n);
        Frac sprod = hankel_from_jacobi(js, n);
        // (2x)^{C(n+1,2)} prod C(k+2,2)^{n-k}
        Rat sc = Rat(Int::pow(Int(2), static_cast<unsigned long>(n) * (n + 1) / 2));
        for (int k = 1; k <= n; ++k)
            sc *= Rat(Int::pow(Int::binomial(k + 2, 2), n - k));
        Frac sclosed = Frac(Poly::term(sc, Monomial{})) * Frac(X.pow(n * (n + 1) / 2));
        if (!(sdet == sprod)) return fail("shifted determinant and lambda-product differ at n=", n);
        if (!(sdet == sclosed)) return fail("shifted Hankel closed form fails at n=", n);
    }
    return pass();
}

// ---- ode suite --------------------------------------------------------

inline Witness check_ode(const Ctx& ctx) {
    // Symbolic in alpha and beta to order 20.
    Series resid = eulerian::ode_residual(Frac::variable(Var::alpha), Frac::variable(Var::beta), 21);
    if (auto n = resid.first_nonzero())
        return fail("symbolic residual nonzero first at index ", *n);
    // And for the (possibly fault-injected) specialized array.
    ERArray arr = ctx.eulerian_arr(21);
    const Poly X = Poly::variable(Var::x);
    Series r2 = eulerian::ode_residual_general(arr.f, Frac(Poly(1) + X), Frac(X));
    if (auto n = r2.first_nonzero())
        return fail("residual of f nonzero first at index ", *n);
    return pass();
}

// ---- binomial suite ---------------------------------------------------

inline Witness check_race_values(const Ctx&) {
    auto [a, b] = eulerian::race_sequences(8);
    const long ea[] = {1, 1, 3, 13, 75, 541, 4683, 47293};
    const long eb[] = {1, 2, 6, 26, 150, 1082, 9366, 94586};
    for (int n = 0; n < 8; ++n) {
        if (!(a.values[n] == Frac(Rat(ea[n])))) return fail("a_", n, " != ", ea[n]);
        if (!(b.values[n] == Frac(Rat(eb[n])))) return fail("b_", n, " != ", eb[n]);
    }
    MomentSeq t = binomial_transform(a);
    for (int n = 0; n < 8; ++n)
        if (!(t.values[n] == b.values[n])) return fail("b is not the binomial transform of a at ", n);
    return pass();
}

inline Witness check_binomial_shift(const Ctx& ctx) {
    for (bool numeric : {false, true}) {
        JacobiParams j = numeric ? eulerian_jacobi(Frac(1), Frac(2), 11) : ctx.jac_eulerian(11);
        MomentSeq mu = moments_from_jacobi(j, 11);
        MomentSeq shifted = moments_from_jacobi(jacobi_shift_for_binomial(j), 11);
        MomentSeq tb = binomial_transform(mu);
        for (int n = 0; n < 11; ++n)
            if (!(shifted.values[n] == tb.values[n]))
                return fail(numeric ? "x=2" : "symbolic", " shift property fails at moment ", n);
    }
    return pass();
}

inline Witness check_example_cfs(const Ctx& ctx) {
    auto [a, b] = eulerian::race_sequences(8);
    JacobiParams base = eulerian_jacobi(Frac(1), Frac(2), 5);
    if (ctx.fault.site == FaultInjection::Site::lambda && ctx.fault.n >= 1 &&
        static_cast<std::size_t>(ctx.fault.n) <= base.lam.size())
        base.lam[ctx.fault.n - 1] += Frac(1);
    Series cf_a = jfraction_ogf(base, 5, 7);
    for (int n = 0; n < 8; ++n)
        if (!(cf_a.coeff(n) == a.values[n])) return fail("first continued fraction differs at term ", n);
    Series cf_shift = jfraction_ogf(shifted_eulerian_jacobi(Frac(1), Frac(2), 5), 5, 7);
    for (int n = 0; n + 1 < 8; ++n)
        if (!(cf_shift.coeff(n) == a.values[n + 1]))
            return fail("second continued fraction differs at term ", n);
    Series cf_b = jfraction_ogf(jacobi_shift_for_binomial(base), 5, 7);
    for (int n = 0; n < 8; ++n)
        if (!(cf_b.coeff(n) == b.values[n])) return fail("third continued fraction differs at term ", n);
    return pass();
}

inline const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = {
        {"riordan.group_laws", {"riordan"}, check_group_homomorphism},
        {"riordan.production_equivalence", {"riordan"}, check_production_equivalence},
        {"riordan.moment_first_column", {"riordan", "moments"}, check_moment_first_column},
        {"riordan.row_sums", {"riordan"}, check_row_sums},
        {"riordan.production_regenerates", {"riordan"}, check_production_regenerates},
        {"eulerian.triangle_displays", {"eulerian"}, check_triangle_displays},
        {"eulerian.triangle_crossval", {"eulerian"}, check_triangle_crossval},
        {"eulerian.poly_fourway", {"eulerian", "moments"}, check_poly_fourway},
        {"eulerian.poly_factorial", {"eulerian"}, check_poly_factorial},
        {"eulerian.descending_power", {"eulerian"}, check_descending_power},
        {"eulerian.general_specializes", {"eulerian"}, check_general_specializes},
        {"eulerian.euler_identity", {"eulerian"}, check_euler_identity},
        {"eulerian.degenerate_closed_forms", {"eulerian"}, check_degenerate_closed_forms},
        {"moments.motzkin_vs_power", {"moments"}, check_motzkin_vs_power},
        {"moments.plain_family", {"moments"}, check_moments_plain_family},
        {"moments.shifted_family", {"moments"}, check_moments_shifted_family},
        {"moments.orthopoly_rows", {"moments"}, check_orthopoly_rows},
        {"moments.jfraction_consistency", {"moments"}, check_jfraction_consistency},
        {"hankel.routes_and_closed_forms", {"hankel"}, check_hankel},
        {"ode.residual_zero", {"ode"}, check_ode},
        {"binomial.race_values", {"binomial"}, check_race_values},
        {"binomial.shift_property", {"binomial"}, check_binomial_shift},
        {"binomial.example_continued_fractions", {"binomial"}, check_example_cfs},
    };
    return checks;
}

}  // namespace verify_detail

inline std::vector<std::string> verify_suites() {
    return {"all", "riordan", "eulerian", "moments", "hankel", "ode", "binomial"};
}

inline Report run_verify_suite(const std::string& suite, const FaultInjection& fault = {}) {
    bool all = suite == "all";
    bool known = all;
    for (const auto& s : verify_suites()) known = known || s == suite;
    if (!known) throw std::invalid_argument("unknown verify suite: " + suite);
    verify_detail::Ctx ctx{fault};
    Report report;
    report.suite = suite;
    for (const auto& check : verify_detail::all_checks()) {
        bool selected = all;
        for (const auto& s : check.suites) selected = selected || s == suite;
        if (!selected) continue;
        CheckResult r;
        r.id = check.id;
        try {
            auto witness = check.fn(ctx);
            r.pass = !witness.has_value();
            if (witness) r.witness = *witness;
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = std::string("exception: ") + e.what();
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

}  // namespace riordan
