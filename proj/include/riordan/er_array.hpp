#pragma once

#include <utility>
#include <variant>

#include "riordan/errors.hpp"
#include "riordan/jacobi.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Exponential Riordan array [g, f]: the lower-triangular matrix whose k-th
// column has exponential generating function g(t) f(t)^k / k!.
//
// Construction requires g invertible (g0 != 0) and f with f0 = 0 and f1
// invertible.  The classical setting additionally has g0 = f1 = 1; arrays
// violating that are accepted but flagged non-monic.
struct ERArray {
    Series g;
    Series f;

    ERArray(Series g_, Series f_) : g(std::move(g_)), f(std::move(f_)) {
        if (g.coeff(0).is_zero()) throw std::invalid_argument("ERArray: g(0) must be invertible");
        if (f.order() < 1 || !f.coeff(0).is_zero() || f.coeff(1).is_zero())
            throw std::invalid_argument("ERArray: f needs f(0) = 0 and invertible f'(0)");
    }

    int order() const { return std::min(g.order(), f.order()); }
    bool monic() const { return g.coeff(0).is_one() && f.coeff(1).is_one(); }

    static ERArray group_identity(int order) {
        return ERArray(Series::one(order), Series::identity(order));
    }
};

// entry(n,k) = (n!/k!) [t^n] g f^k, rows and columns 0..size-1.
inline LTMatrix er_expand(const ERArray& arr, int size) {
    if (size < 1) throw std::invalid_argument("er_expand: size must be positive");
    if (arr.order() < size - 1)
        throw TruncationTooShort("er_expand: series order too short for requested size");
    Matrix m(size);
    Series col = arr.g;  // g f^k as k advances
    Rat kfact(1);
    for (int k = 0; k < size; ++k) {
        if (k > 0) {
            col = col * arr.f;
            kfact *= Rat(k);
        }
        for (int n = k; n < size; ++n)
            m.at(n, k) = col.coeff(n) * Frac(Rat::factorial(n) / kfact);
    }
    return LTMatrix(std::move(m));
}

// Group law [g,f].[h,l] = [g (h o f), l o f].
inline ERArray er_multiply(const ERArray& a, const ERArray& b) {
    return ERArray(a.g * b.g.compose(a.f), b.f.compose(a.f));
}

// [g,f]^{-1} = [1/(g o fbar), fbar] with fbar the compositional inverse.
inline ERArray er_inverse(const ERArray& a) {
    Series fbar = a.f.revert();
    return ERArray(a.g.compose(fbar).inverse(), fbar);
}

// EGF of the row sums: g e^f.
inline Series row_sums_egf(const ERArray& arr) {
    return arr.g * arr.f.exp();
}

struct ProductionData {
    Series Z;
    Series A;
    ProductionMatrix P;
};

// Production matrix from the generating-function characterization:
// A = f'(fbar), Z = g'(fbar)/g(fbar), and the matrix has bivariate EGF
// e^{ty} (Z(t) + A(t) y).
//
// Entry rule: expanding e^{ty} = sum_j t^j y^j / j!, the coefficient of y^k
// is Z t^k/k! + A t^{k-1}/(k-1)!, and entry (n,k) is n! times its t^n
// coefficient:
//     P(n,k) = (n!/k!) [t^{n-k}] Z + (n!/(k-1)!) [t^{n-k+1}] A     (k >= 1)
//     P(n,0) = n! [t^n] Z.
inline ProductionData production_analytic(const ERArray& arr, int size) {
    if (size < 1) throw std::invalid_argument("production_analytic: size must be positive");
    if (arr.order() < size)
        throw TruncationTooShort("production_analytic: size requires series order >= size");
    Series fbar = arr.f.revert();
    Series A = arr.f.derivative().compose(fbar);
    Series Z = arr.g.derivative().compose(fbar).divide(arr.g.compose(fbar));
    Matrix p(size);
    for (int n = 0; n < size; ++n) {
        for (int k = 0; k <= std::min(n + 1, size - 1); ++k) {
            Frac entry;
            if (n - k >= 0 && n - k <= Z.order())
                entry += Z.coeff(n - k) * Frac(Rat::factorial(n) / Rat::factorial(k));
            if (k >= 1 && n - k + 1 <= A.order())
                entry += A.coeff(n - k + 1) * Frac(Rat::factorial(n) / Rat::factorial(k - 1));
            p.at(n, k) = std::move(entry);
        }
    }
    return ProductionData{std::move(Z), std::move(A), ProductionMatrix(std::move(p))};
}

// Production matrix from the matrix identity P = L^{-1} Lbar, where Lbar is
// L with its top row removed.  An exact P of size m needs L of size m+1:
// row i of the size-(m) product only consumes rows 1..m of L, so the result
// carries no truncation contamination.  Hence: input size n, output size n-1.
inline ProductionMatrix production_numeric(const LTMatrix& L) {
    int n = L.size();
    if (n < 2) throw std::invalid_argument("production_numeric: need size >= 2");
    LTMatrix inv = L.inverse();
    int m = n - 1;
    Matrix p(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Frac acc;
            for (int s = j >= 1 ? j - 1 : 0; s <= i; ++s) {
                // Lbar(s, j) = L(s+1, j); inv is lower-triangular.
                if (s + 1 < j) continue;
                const Frac& a = inv.at(i, s);
                if (a.is_zero()) continue;
                const Frac& b = L.at(s + 1, j);
                if (b.is_zero()) continue;
                acc += a * b;
            }
            p.at(i, j) = std::move(acc);
        }
    return ProductionMatrix(std::move(p));
}

// Generate the array back from its production matrix: row 0 = e_0 and
// row_{n+1} = row_n P.  Test oracle for both production routes.
inline LTMatrix matrix_from_production(const ProductionMatrix& p, int size) {
    if (size < 1 || p.size() < size)
        throw std::invalid_argument("matrix_from_production: production matrix too small");
    Matrix m(size);
    m.at(0, 0) = Frac(1);
    for (int n = 1; n < size; ++n)
        for (int k = 0; k <= n; ++k) {
            Frac acc;
            for (int s = k >= 1 ? k - 1 : 0; s <= n - 1; ++s) {
                const Frac& prev = m.at(n - 1, s);
                if (prev.is_zero()) continue;
                acc += prev * p.at(s, k);
            }
            m.at(n, k) = std::move(acc);
        }
    return LTMatrix(std::move(m));
}

// First entry found outside the tridiagonal band (or a superdiagonal entry
// that is not exactly 1).
struct NotTridiagonal {
    int row = 0;
    int col = 0;
    Frac value;
};

// Exact band test.  On success returns a_n = P(n,n) and lambda_n = P(n,n-1).
inline std::variant<JacobiParams, NotTridiagonal> detect_tridiagonal(const ProductionMatrix& p) {
    int n = p.size();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (c == r || c == r - 1) continue;
            if (c == r + 1) {
                if (!p.at(r, c).is_one()) return NotTridiagonal{r, c, p.at(r, c)};
            } else if (!p.at(r, c).is_zero()) {
                return NotTridiagonal{r, c, p.at(r, c)};
            }
        }
    JacobiParams j;
    for (int i = 0; i < n; ++i) j.a.push_back(p.at(i, i));
    for (int i = 1; i < n; ++i) j.lam.push_back(p.at(i, i - 1));
    return j;
}

}  // namespace riordan
