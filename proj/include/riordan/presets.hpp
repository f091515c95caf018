#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "riordan/er_array.hpp"
#include "riordan/jacobi.hpp"

namespace riordan {

// The array families used throughout: the general two-parameter family with
// EGF g = (a-b) e^{(a-b)t} / (a - b e^{(a-b)t}), its derivative-shifted
// companion, the two one-parameter limit arrays for a = b, the binomial
// array, and the Laguerre-flavoured special case.  Parameters may be bound
// to rationals or left as the symbolic variables alpha, beta, x.

inline Series exp_linear(const Frac& c, int order) {  // e^{c t}
    return (Series::identity(order) * c).exp();
}

inline ERArray eulerian_array(const Frac& alpha, const Frac& beta, int order) {
    Frac d = alpha - beta;
    if (d.is_zero())
        throw std::invalid_argument("alpha = beta: use the degenerate presets (limit arrays)");
    Series E = exp_linear(d, order);
    Series den = Series::constant(alpha, order) - E * beta;
    Series g = (E * d).divide(den);
    Series f = (E - Series::one(order)).divide(den);
    return ERArray(std::move(g), std::move(f));
}

// [g', f] for the same g, f; with alpha = 1, beta = x its first column EGF
// generates the once-shifted Eulerian polynomials.
inline ERArray shifted_eulerian_array(const Frac& alpha, const Frac& beta, int order) {
    ERArray base = eulerian_array(alpha, beta, order + 1);
    return ERArray(base.g.derivative(), base.f.truncate(order));
}

inline ERArray degenerate_plain_array(const Frac& alpha, int order) {
    if (!alpha.is_polynomial()) throw std::invalid_argument("degenerate preset needs polynomial alpha");
    const Poly t = Poly::variable(Var::t);
    Poly den = Poly(1) - alpha.num() * t;
    Series g = Series::from_rational(Frac(Poly(1), den), order);
    Series f = Series::from_rational(Frac(t, den), order);
    return ERArray(std::move(g), std::move(f));
}

inline ERArray degenerate_shifted_array(const Frac& alpha, int order) {
    if (!alpha.is_polynomial()) throw std::invalid_argument("degenerate preset needs polynomial alpha");
    const Poly t = Poly::variable(Var::t);
    Poly den = Poly(1) - alpha.num() * t;
    Series g = Series::from_rational(Frac(Poly(1), den * den), order);
    Series f = Series::from_rational(Frac(t, den), order);
    return ERArray(std::move(g), std::move(f));
}

inline ERArray binomial_array(int order) {
    return ERArray(Series::identity(order).exp(), Series::identity(order));
}

inline ERArray laguerre_like_array(int order) {
    return degenerate_plain_array(Frac(1), order);
}

// Closed-form recurrence coefficients for each family; count n delivers
// a_0..a_{n-1} and lambda_1..lambda_{n-1}.
inline JacobiParams eulerian_jacobi(const Frac& alpha, const Frac& beta, int n) {
    JacobiParams j;
    for (int k = 0; k < n; ++k) j.a.push_back(Frac(k + 1) * alpha + Frac(k) * beta);
    for (int k = 1; k < n; ++k) j.lam.push_back(Frac(static_cast<long>(k) * k) * alpha * beta);
    return j;
}

inline JacobiParams shifted_eulerian_jacobi(const Frac& alpha, const Frac& beta, int n) {
    JacobiParams j;
    for (int k = 0; k < n; ++k) j.a.push_back(Frac(k + 1) * (alpha + beta));
    for (int k = 1; k < n; ++k) j.lam.push_back(Frac(static_cast<long>(k) * (k + 1)) * alpha * beta);
    return j;
}

inline JacobiParams degenerate_plain_jacobi(const Frac& alpha, int n) {
    return eulerian_jacobi(alpha, alpha, n);
}

inline JacobiParams degenerate_shifted_jacobi(const Frac& alpha, int n) {
    return shifted_eulerian_jacobi(alpha, alpha, n);
}

inline JacobiParams binomial_jacobi(int n) {
    JacobiParams j;
    for (int k = 0; k < n; ++k) j.a.push_back(Frac(1));
    for (int k = 1; k < n; ++k) j.lam.push_back(Frac(0));
    return j;
}

// Named preset with parameter bindings, as consumed by the CLI.
struct Family {
    enum class Kind { eulerian, shifted, degenerate_plain, degenerate_shifted, binomial, laguerre_like };

    Kind kind;
    Frac alpha{Frac(1)};
    Frac beta{Poly::variable(Var::x)};

    static std::optional<Family::Kind> kind_by_name(std::string_view name) {
        if (name == "eulerian") return Kind::eulerian;
        if (name == "shifted") return Kind::shifted;
        if (name == "degenerate-plain") return Kind::degenerate_plain;
        if (name == "degenerate-shifted") return Kind::degenerate_shifted;
        if (name == "binomial") return Kind::binomial;
        if (name == "laguerre-like") return Kind::laguerre_like;
        return std::nullopt;
    }

    ERArray array(int order) const {
        switch (kind) {
            case Kind::eulerian: return eulerian_array(alpha, beta, order);
            case Kind::shifted: return shifted_eulerian_array(alpha, beta, order);
            case Kind::degenerate_plain: return degenerate_plain_array(alpha, order);
            case Kind::degenerate_shifted: return degenerate_shifted_array(alpha, order);
            case Kind::binomial: return binomial_array(order);
            case Kind::laguerre_like: return laguerre_like_array(order);
        }
        throw std::logic_error("unreachable");
    }

    JacobiParams jacobi(int count) const {
        switch (kind) {
            case Kind::eulerian: return eulerian_jacobi(alpha, beta, count);
            case Kind::shifted: return shifted_eulerian_jacobi(alpha, beta, count);
            case Kind::degenerate_plain: return degenerate_plain_jacobi(alpha, count);
            case Kind::degenerate_shifted: return degenerate_shifted_jacobi(alpha, count);
            case Kind::binomial: return binomial_jacobi(count);
            case Kind::laguerre_like: return degenerate_plain_jacobi(Frac(1), count);
        }
        throw std::logic_error("unreachable");
    }
};

}  // namespace riordan
