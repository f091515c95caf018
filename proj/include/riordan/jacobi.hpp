#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/fraction.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Diagonal a_0, a_1, ... and subdiagonal lambda_1, lambda_2, ... of a
// tridiagonal production matrix with unit superdiagonal.  lam[i] stores
// lambda_{i+1}.  These two sequences are the bridge between moments,
// orthogonal polynomials, J-fractions and Hankel transforms.
struct JacobiParams {
    std::vector<Frac> a;
    std::vector<Frac> lam;

    const Frac& diag(int n) const {
        if (n < 0 || static_cast<std::size_t>(n) >= a.size())
            throw InsufficientParams("diagonal index out of range");
        return a[n];
    }
    // lambda_n, indexed from 1.
    const Frac& sub(int n) const {
        if (n < 1 || static_cast<std::size_t>(n) > lam.size())
            throw InsufficientParams("subdiagonal index out of range");
        return lam[n - 1];
    }

    // The tridiagonal matrix itself (unit superdiagonal), size m.
    Matrix to_matrix(int m) const {
        if (static_cast<std::size_t>(m) > a.size() || (m > 1 && static_cast<std::size_t>(m - 1) > lam.size()))
            throw InsufficientParams();
        Matrix p(m);
        for (int i = 0; i < m; ++i) {
            p.at(i, i) = a[i];
            if (i + 1 < m) p.at(i + 1, i) = lam[i];
            if (i + 1 < m) p.at(i, i + 1) = Frac(1);
        }
        return p;
    }
};

struct MomentSeq {
    std::vector<Frac> values;

    int count() const { return static_cast<int>(values.size()); }
    const Frac& at(int n) const {
        if (n < 0 || static_cast<std::size_t>(n) >= values.size())
            throw InsufficientValues();
        return values[n];
    }
};

// Monic orthogonal polynomial in t: coeffs[i] multiplies t^i,
// coeffs[degree] = 1.
struct OrthoPoly {
    int degree = 0;
    std::vector<Frac> coeffs;

    Poly to_poly() const {
        Poly p;
        for (int i = 0; i <= degree; ++i) {
            if (auto pi = coeffs[i].as_polynomial())
                p += *pi * Poly::variable(Var::t).pow(i);
            else
                throw std::logic_error("orthogonal polynomial coefficient is not polynomial");
        }
        return p;
    }
};

// First count moments by the weighted-Motzkin-path triangle recurrence:
// m(0,0) = 1,  m(n,k) = m(n-1,k-1) + a_k m(n-1,k) + lambda_{k+1} m(n-1,k+1),
// mu_n = m(n,0).  Equivalent to reading off (P^n)_{0,0}.
inline MomentSeq moments_from_jacobi(const JacobiParams& j, int count) {
    if (count <= 0) throw InsufficientValues();
    int rows = count - 1;
    if (rows > 0 &&
        (j.a.size() < static_cast<std::size_t>(rows) || j.lam.size() + 1 < static_cast<std::size_t>(rows)))
        throw InsufficientParams("need a_0..a_{m-2} and lambda_1..lambda_{m-2} for m moments");
    auto row_at = [](const std::vector<Frac>& row, int k) -> Frac {
        if (k < 0 || static_cast<std::size_t>(k) >= row.size()) return Frac(0);
        return row[k];
    };
    MomentSeq mu;
    mu.values.reserve(count);
    std::vector<Frac> row{Frac(1)};
    mu.values.push_back(Frac(1));
    for (int n = 1; n <= rows; ++n) {
        std::vector<Frac> next(n + 1);
        for (int k = 0; k <= n; ++k) {
            Frac acc;
            if (k > 0) acc += row_at(row, k - 1);
            if (static_cast<std::size_t>(k) < j.a.size()) acc += j.a[k] * row_at(row, k);
            if (static_cast<std::size_t>(k) < j.lam.size()) acc += j.lam[k] * row_at(row, k + 1);
            next[k] = std::move(acc);
        }
        row = std::move(next);
        mu.values.push_back(row[0]);
    }
    return mu;
}

// Monic three-term recurrence p_n = (t - a_{n-1}) p_{n-1} - lambda_{n-1} p_{n-2}.
inline OrthoPoly orthopoly_from_jacobi(const JacobiParams& j, int n) {
    if (n < 0) throw InsufficientParams("negative degree");
    if (n >= 1 && j.a.size() < static_cast<std::size_t>(n)) throw InsufficientParams();
    if (n >= 2 && j.lam.size() < static_cast<std::size_t>(n - 1)) throw InsufficientParams();
    std::vector<Frac> prev{Frac(1)};          // p_0
    if (n == 0) return {0, std::move(prev)};
    std::vector<Frac> cur{-j.a[0], Frac(1)};  // p_1 = t - a_0
    for (int m = 2; m <= n; ++m) {
        std::vector<Frac> next(m + 1);
        // t * cur
        for (int i = 0; i < m; ++i) next[i + 1] += cur[i];
        // - a_{m-1} * cur
        for (int i = 0; i < m; ++i) next[i] -= j.a[m - 1] * cur[i];
        // - lambda_{m-1} * prev
        for (int i = 0; i < m - 1; ++i) next[i] -= j.lam[m - 2] * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, std::move(cur)};
}

// Ordinary generating function of the moments as the depth-d truncated
// J-fraction 1/(1 - a_0 t - lambda_1 t^2/(1 - a_1 t - ...)), evaluated
// bottom-up over exact rational functions of t and expanded once at the end.
// Coefficients 0..2d-1 of the result equal the moments exactly.
inline Series jfraction_ogf(const JacobiParams& j, int depth, int order) {
    if (depth < 1) throw DepthExceedsParams();
    if (j.a.size() < static_cast<std::size_t>(depth) ||
        j.lam.size() < static_cast<std::size_t>(depth - 1))
        throw DepthExceedsParams();
    const Poly t = Poly::variable(Var::t);
    auto level_den = [&](int k) {  // 1 - a_k t as a Frac numerator/denominator pair
        return Frac(Poly(1)) - Frac(t) * j.a[k];
    };
    Frac tail = Frac(Poly(1)) / level_den(depth - 1);
    for (int k = depth - 2; k >= 0; --k) {
        Frac den = level_den(k) - Frac(t * t) * j.lam[k] * tail;
        tail = Frac(Poly(1)) / den;
    }
    return Series::from_rational(tail, order);
}

// Exact Hankel determinant det(mu_{i+j})_{0<=i,j<=n} by fraction-free
// Bareiss elimination.  Rows are first scaled to polynomial entries (the
// scale factors divide back out of the determinant at the end), so all
// intermediate divisions are exact polynomial divisions.
inline Frac hankel_det(const MomentSeq& seq, int n) {
    if (n < 0) throw InsufficientValues();
    if (seq.count() < 2 * n + 1) throw InsufficientValues();
    auto exact_quotient = [](const Poly& num, const Poly& den) {
        auto q = try_divide(num, den);
        if (!q) throw std::logic_error("hankel_det: inexact polynomial division");
        return std::move(*q);
    };
    int m = n + 1;
    std::vector<std::vector<Poly>> a(m, std::vector<Poly>(m));
    Frac scale(1);
    for (int i = 0; i < m; ++i) {
        Poly common(Rat(1));
        for (int jx = 0; jx < m; ++jx) common = common * seq.at(i + jx).den();
        scale = scale * Frac(common);
        for (int jx = 0; jx < m; ++jx) {
            const Frac& e = seq.at(i + jx);
            a[i][jx] = e.num() * exact_quotient(common, e.den());
        }
    }
    // Bareiss with division by the previous pivot; exact at every step.
    int sign = 1;
    Poly prev(Rat(1));
    for (int k = 0; k < m - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < m; ++r)
                if (!a[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Frac(0);  // singular: zero column
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i) {
            for (int jx = k + 1; jx < m; ++jx) {
                Poly num = a[i][jx] * a[k][k] - a[i][k] * a[k][jx];
                a[i][jx] = num.is_zero() ? Poly() : exact_quotient(num, prev);
            }
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    Frac det(a[m - 1][m - 1]);
    if (sign < 0) det = -det;
    return det / scale;
}

// Hankel transform from the recurrence coefficients alone:
// h_n = prod_{k=1..n} lambda_k^{n+1-k}.
//
// Derivation: with monic orthogonal polynomials p_k for the moment
// functional L, expanding the Hankel bilinear form in the p-basis
// triangularizes it, so det(mu_{i+j}) = prod_k L(p_k^2); the three-term
// recurrence gives L(p_k^2) = lambda_1 ... lambda_k (mu_0 = 1), and
// collecting powers yields the product above.
inline Frac hankel_from_jacobi(const JacobiParams& j, int n) {
    if (n < 0 || j.lam.size() < static_cast<std::size_t>(n)) throw InsufficientParams();
    Frac h(1);
    for (int k = 1; k <= n; ++k)
        for (int e = 0; e < n + 1 - k; ++e) h = h * j.lam[k - 1];
    return h;
}

// b_n = sum_k C(n,k) a_k.
inline MomentSeq binomial_transform(const MomentSeq& seq) {
    MomentSeq out;
    out.values.reserve(seq.values.size());
    for (int n = 0; n < seq.count(); ++n) {
        Frac acc;
        for (int k = 0; k <= n; ++k) acc += Frac(Rat::binomial(n, k)) * seq.values[k];
        out.values.push_back(std::move(acc));
    }
    return out;
}

// The J-fraction of the binomial transform shifts every diagonal
// coefficient up by one and keeps the lambdas.
inline JacobiParams jacobi_shift_for_binomial(const JacobiParams& j) {
    JacobiParams out = j;
    for (auto& an : out.a) an += Frac(1);
    return out;
}

}  // namespace riordan
