#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/fraction.hpp"

namespace riordan {

// Truncated power series in t with Frac coefficients.
//
// A Series of order N stores the ordinary coefficients c0..cN of t^0..t^N;
// the EGF read-out is egf_coeff(n) = n! * c_n, exact.  Binary operations
// truncate to the minimum operand order.  derivative() lowers the order by
// one, and that reduced order propagates through everything consuming the
// result, so callers that need a derivative exact to order N must build the
// input at order N+1.
class Series {
public:
    explicit Series(int order) : order_(order), c_(order + 1) {
        if (order < 0) throw TruncationTooShort("series order must be >= 0");
    }

    static Series constant(const Frac& value, int order) {
        Series s(order);
        s.c_[0] = value;
        return s;
    }
    static Series one(int order) { return constant(Frac(1), order); }

    // The series t.
    static Series identity(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = Frac(1);
        return s;
    }

    static Series from_coeffs(std::vector<Frac> coeffs) {
        if (coeffs.empty()) throw TruncationTooShort("empty coefficient list");
        Series s(static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    // Expansion of a rational function of t whose coefficients may involve
    // the other variables.  Splits numerator and denominator by t-degree and
    // long-divides; the denominator's t-free part must be nonzero.
    static Series from_rational(const Frac& f, int order) {
        Series num = split_by_t(f.num(), order);
        Series den = split_by_t(f.den(), order);
        return num.divide(den);
    }

    int order() const { return order_; }
    const Frac& coeff(int n) const {
        if (n < 0 || n > order_) throw IndexOutOfRange("series coefficient index");
        return c_[n];
    }
    Frac egf_coeff(int n) const { return coeff(n) * Frac(Rat::factorial(n)); }

    void set_coeff(int n, Frac v) {
        if (n < 0 || n > order_) throw IndexOutOfRange("series coefficient index");
        c_[n] = std::move(v);
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Frac& f) { return f.is_zero(); });
    }
    std::optional<int> first_nonzero() const {
        for (int n = 0; n <= order_; ++n)
            if (!c_[n].is_zero()) return n;
        return std::nullopt;
    }

    Series truncate(int new_order) const {
        if (new_order > order_) throw TruncationTooShort("cannot extend a series by truncation");
        Series s(new_order);
        std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order_, b.order_);
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order_, b.order_);
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Series operator-() const {
        Series r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    // Cauchy product truncated to the minimum order.
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order_, b.order_);
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend Series operator*(Series s, const Frac& k) {
        for (auto& c : s.c_) c = c * k;
        return s;
    }
    friend Series operator*(const Frac& k, Series s) { return std::move(s) * k; }

    // Quotient q with q * b = a up to truncation; needs b's constant term
    // invertible.
    Series divide(const Series& b) const {
        if (b.c_[0].is_zero()) throw NonInvertibleConstantTerm();
        int n = std::min(order_, b.order_);
        Series q(n);
        Frac inv = b.c_[0].inverse();
        for (int i = 0; i <= n; ++i) {
            Frac acc = c_[i];
            for (int j = 1; j <= i; ++j) {
                if (b.c_[j].is_zero() || q.c_[i - j].is_zero()) continue;
                acc -= b.c_[j] * q.c_[i - j];
            }
            q.c_[i] = acc * inv;
        }
        return q;
    }

    Series inverse() const { return one(order_).divide(*this); }

    // outer(inner), Horner form; inner must have zero constant term.
    Series compose(const Series& inner) const {
        if (!inner.c_[0].is_zero()) throw NonzeroInnerConstant();
        int n = std::min(order_, inner.order_);
        // Horner from the top usable degree down; outer coefficients above n
        // only feed powers of t beyond the truncation.
        Series r = constant(c_[n], n);
        for (int k = n - 1; k >= 0; --k) {
            r = r * inner;
            r.c_[0] += c_[k];
        }
        return r;
    }

    // Compositional inverse: g with (*this)(g(t)) = t, coefficient by
    // coefficient.  Degree-n unknowns enter the composition linearly through
    // c1 * g_n, so each step solves one linear equation using the already
    // known lower coefficients.
    Series revert() const {
        if (order_ < 1 || !c_[0].is_zero() || c_[1].is_zero()) throw NotRevertible();
        Series g(order_);
        Frac inv = c_[1].inverse();
        g.c_[1] = inv;
        for (int n = 2; n <= order_; ++n) {
            Series fn = truncate(n);
            Series gn = g.truncate(n);  // g_n still zero here
            Frac hn = fn.compose(gn).c_[n];
            g.c_[n] = -hn * inv;
        }
        return g;
    }

    Series derivative() const {
        if (order_ == 0) return Series(0);
        Series r(order_ - 1);
        for (int i = 0; i < order_; ++i) r.c_[i] = c_[i + 1] * Frac(Rat(i + 1));
        return r;
    }

    // exp(a) for a with zero constant term, via E' = a'E.
    Series exp() const {
        if (!c_[0].is_zero()) throw BadConstantTerm("series exp needs zero constant term");
        Series e(order_);
        e.c_[0] = Frac(1);
        for (int n = 0; n < order_; ++n) {
            Frac acc;
            for (int k = 0; k <= n; ++k) {
                if (c_[k + 1].is_zero() || e.c_[n - k].is_zero()) continue;
                acc += Frac(Rat(k + 1)) * c_[k + 1] * e.c_[n - k];
            }
            e.c_[n + 1] = acc * Frac(Rat(1, n + 1));
        }
        return e;
    }

    // log(a) for a with constant term 1, via a L' = a'.
    Series log() const {
        if (!c_[0].is_one()) throw BadConstantTerm("series log needs constant term 1");
        Series l(order_);
        for (int n = 0; n < order_; ++n) {
            Frac acc = Frac(Rat(n + 1)) * c_[n + 1];
            for (int k = 0; k < n; ++k) {
                if (l.c_[k + 1].is_zero() || c_[n - k].is_zero()) continue;
                acc -= Frac(Rat(k + 1)) * l.c_[k + 1] * c_[n - k];
            }
            l.c_[n + 1] = acc * Frac(Rat(1, n + 1));
        }
        return l;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.order_ != b.order_) return false;
        for (int i = 0; i <= a.order_; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    // Equality of the first n+1 coefficients, ignoring order mismatch.
    static bool agree_to(const Series& a, const Series& b, int n) {
        if (a.order_ < n || b.order_ < n) throw TruncationTooShort("agree_to beyond stored order");
        for (int i = 0; i <= n; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i <= order_; ++i) {
            if (i) out += ", ";
            out += c_[i].str();
        }
        return "[" + out + "]";
    }

private:
    // Collect a polynomial's terms by t-degree into a series whose
    // coefficients are t-free fractions.
    static Series split_by_t(const Poly& p, int order) {
        Series s(order);
        std::vector<Poly> parts(order + 1);
        for (const auto& [m, c] : p.terms()) {
            std::uint32_t dt = m[Var::t];
            if (dt > static_cast<std::uint32_t>(order)) continue;
            Monomial rest = m;
            rest.exp[static_cast<int>(Var::t)] = 0;
            parts[dt] += Poly::term(c, rest);
        }
        for (int i = 0; i <= order; ++i) s.c_[i] = Frac(std::move(parts[i]));
        return s;
    }

    int order_;
    std::vector<Frac> c_;
};

}  // namespace riordan
