#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/presets.hpp"

namespace riordan::eulerian {

// The three Eulerian number triangles:
//   W      - rows 1 / 1 / 1 1 / 1 4 1 / 1 11 11 1 / ...
//   A      - the reversal of W, with a leading zero column
//   Atilde - the Pascal-like triangle, Atilde(n,k) = A(n+1,k+1)
// Every entry is computed by a closed-form sum and by a two-term recurrence;
// the library cross-checks the two routes in its verification suite.

enum class TriangleKind { W, A, Atilde };

inline TriangleKind triangle_kind_by_name(std::string_view name) {
    if (name == "W" || name == "w") return TriangleKind::W;
    if (name == "A" || name == "a") return TriangleKind::A;
    if (name == "Atilde" || name == "atilde") return TriangleKind::Atilde;
    throw std::invalid_argument("unknown triangle kind (expected W, A or Atilde)");
}

// 0^0 = 1 throughout: the boundary terms of the closed forms need it.
inline Int signed_power(long base, unsigned long e) { return Int::pow(Int(base), e); }

// W(n,k) = sum_{i=0}^{n-k} (-1)^i C(n+1,i) (n-k-i)^n
inline Int closed_form_W(int n, int k) {
    Int acc(0);
    for (int i = 0; i + k <= n; ++i) {
        Int term = Int::binomial(n + 1, i) * signed_power(n - k - i, n);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

// A(n,k) = sum_{i=0}^{k} (-1)^i C(n+1,i) (k-i)^n
inline Int closed_form_A(int n, int k) {
    Int acc(0);
    for (int i = 0; i <= k; ++i) {
        Int term = Int::binomial(n + 1, i) * signed_power(k - i, n);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

inline Int closed_form_Atilde(int n, int k) { return closed_form_A(n + 1, k + 1); }

// The same triangle entries from the recurrences, as a full table of rows
// 0..max_row.  Out-of-range neighbours count as zero.
inline std::vector<std::vector<Int>> recurrence_rows_W(int max_row) {
    std::vector<std::vector<Int>> rows;
    for (int n = 0; n <= max_row; ++n) {
        std::vector<Int> row(n + 1, Int(0));
        if (n == 0) {
            row[0] = Int(1);
        } else {
            auto& prev = rows[n - 1];
            auto get = [&](int k) { return (k >= 0 && k < static_cast<int>(prev.size())) ? prev[k] : Int(0); };
            for (int k = 0; k <= n; ++k)
                row[k] = Int(k + 1) * get(k) + Int(n - k) * get(k - 1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Atilde(n,k) = (n-k+1) Atilde(n-1,k-1) + (k+1) Atilde(n-1,k)
inline std::vector<std::vector<Int>> recurrence_rows_Atilde(int max_row) {
    std::vector<std::vector<Int>> rows;
    for (int n = 0; n <= max_row; ++n) {
        std::vector<Int> row(n + 1, Int(0));
        if (n == 0) {
            row[0] = Int(1);
        } else {
            auto& prev = rows[n - 1];
            auto get = [&](int k) { return (k >= 0 && k < static_cast<int>(prev.size())) ? prev[k] : Int(0); };
            for (int k = 0; k <= n; ++k)
                row[k] = Int(n - k + 1) * get(k - 1) + Int(k + 1) * get(k);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// A's recurrence route is the reversal of W's.
inline std::vector<std::vector<Int>> recurrence_rows_A(int max_row) {
    auto w = recurrence_rows_W(max_row);
    std::vector<std::vector<Int>> rows;
    for (int n = 0; n <= max_row; ++n) {
        std::vector<Int> row(n + 1, Int(0));
        for (int k = 0; k <= n; ++k) row[k] = w[n][n - k];
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<std::vector<Int>> triangle_rows(TriangleKind kind, int max_row) {
    if (max_row < 0) throw IndexOutOfRange("triangle row index");
    switch (kind) {
        case TriangleKind::W: return recurrence_rows_W(max_row);
        case TriangleKind::A: return recurrence_rows_A(max_row);
        case TriangleKind::Atilde: return recurrence_rows_Atilde(max_row);
    }
    throw std::logic_error("unreachable");
}

inline Int triangle_closed_form(TriangleKind kind, int n, int k) {
    switch (kind) {
        case TriangleKind::W: return closed_form_W(n, k);
        case TriangleKind::A: return closed_form_A(n, k);
        case TriangleKind::Atilde: return closed_form_Atilde(n, k);
    }
    throw std::logic_error("unreachable");
}

inline Rat triangle_entry(TriangleKind kind, int n, int k) {
    if (n < 0 || k < 0 || k > n) throw IndexOutOfRange("triangle entry needs 0 <= k <= n");
    Int closed = triangle_closed_form(kind, n, k);
    Int rec = triangle_rows(kind, n)[n][k];
    if (!(closed == rec))
        throw std::logic_error("triangle closed form and recurrence disagree");
    return Rat(closed);
}

// P_n(x) = sum_k W(n,k) x^k, from the recurrence-generated row.
inline Poly poly_in(int n, Var v) {
    auto rows = recurrence_rows_W(n);
    Poly p;
    for (int k = 0; k <= n; ++k) {
        if (rows[n][k].is_zero()) continue;
        Monomial m;
        m.exp[static_cast<int>(v)] = k;
        p += Poly::term(Rat(rows[n][k]), m);
    }
    return p;
}

inline Poly poly(int n) { return poly_in(n, Var::x); }

// EGF coefficient n of the two-parameter family, as a polynomial in alpha
// and beta.
inline Poly general_poly(int n) {
    Frac a = Frac::variable(Var::alpha);
    Frac b = Frac::variable(Var::beta);
    ERArray arr = eulerian_array(a, b, std::max(n, 1));
    Frac c = arr.g.egf_coeff(n);
    auto p = c.as_polynomial();
    if (!p) throw std::logic_error("general family coefficient did not reduce to a polynomial");
    return *p;
}

// sum_{k>=0} (k+1)^n t^k  ==  P_n(t) / (1-t)^{n+1}, verified as series to
// the given order by multiplying through by (1-t)^{n+1}.
inline bool euler_identity_holds(int n, int order) {
    if (n < 0 || order < 0) throw IndexOutOfRange("euler identity parameters");
    Series lhs(order);
    for (int k = 0; k <= order; ++k)
        lhs.set_coeff(k, Frac(Rat(Int::pow(Int(k + 1), n))));
    Series one_minus_t = Series::one(order) - Series::identity(order);
    Series factor = Series::one(order);
    for (int i = 0; i <= n; ++i) factor = factor * one_minus_t;
    Series left = lhs * factor;
    Series right(order);
    auto rows = recurrence_rows_W(n);
    for (int k = 0; k <= n && k <= order; ++k) right.set_coeff(k, Frac(Rat(rows[n][k])));
    return left == right;
}

enum class DegenerateVariant { plain, shifted };

inline LTMatrix degenerate_array(DegenerateVariant variant, const Frac& alpha, int size) {
    ERArray arr = variant == DegenerateVariant::plain ? degenerate_plain_array(alpha, size)
                                                      : degenerate_shifted_array(alpha, size);
    return er_expand(arr, size);
}

// Closed forms for the degenerate arrays' entries:
//   plain   C(n,k)     n!/k! alpha^{n-k}
//   shifted C(n+1,k+1) n!/k! alpha^{n-k}
inline Frac degenerate_entry_closed_form(DegenerateVariant variant, const Frac& alpha, int n, int k) {
    if (n < 0 || k < 0 || k > n) throw IndexOutOfRange("degenerate entry needs 0 <= k <= n");
    Int binom = variant == DegenerateVariant::plain ? Int::binomial(n, k) : Int::binomial(n + 1, k + 1);
    Frac r(Rat(binom * Int::factorial(n), Int::factorial(k)));
    for (int e = 0; e < n - k; ++e) r = r * alpha;
    return r;
}

// Residual of dy/dt = 1 + mu y + nu y^2 for a given candidate y; identically
// zero exactly on solutions.  The order drops by one with the derivative.
inline Series ode_residual_general(const Series& f, const Frac& mu, const Frac& nu) {
    int n = f.order() - 1;
    Series fd = f.derivative();
    Series rhs = Series::one(n) + f.truncate(n) * mu + (f * f).truncate(n) * nu;
    return fd - rhs;
}

// Residual of dy/dt = (1 + alpha y)(1 + beta y) for the family's own f.
// The factored and expanded right-hand sides are formed independently and
// both residuals are returned as one (they are asserted equal).
inline Series ode_residual(const Frac& alpha, const Frac& beta, int order) {
    if (order < 2) throw TruncationTooShort("ode_residual needs order >= 2");
    ERArray arr = eulerian_array(alpha, beta, order);
    const Series& f = arr.f;
    int n = order - 1;
    Series factored = f.derivative() -
                      (Series::one(n) + f.truncate(n) * alpha) * (Series::one(n) + f.truncate(n) * beta);
    Series general = ode_residual_general(f, alpha + beta, alpha * beta);
    if (!(factored == general))
        throw std::logic_error("factored and expanded ODE forms disagree");
    return factored;
}

// a_n = sum_k W(n,k) 2^k (preferential arrangements) and
// b_n = sum_k A(n,k) 2^k, its binomial transform.
inline std::pair<MomentSeq, MomentSeq> race_sequences(int count) {
    if (count < 1) throw InsufficientValues();
    auto w = recurrence_rows_W(count - 1);
    MomentSeq a, b;
    for (int n = 0; n < count; ++n) {
        Int an(0), bn(0);
        for (int k = 0; k <= n; ++k) {
            Int p2 = Int::pow(Int(2), k);
            an += w[n][k] * p2;
            bn += w[n][n - k] * p2;
        }
        a.values.push_back(Frac(Rat(an)));
        b.values.push_back(Frac(Rat(bn)));
    }
    return {std::move(a), std::move(b)};
}

}  // namespace riordan::eulerian
