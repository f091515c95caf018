#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "riordan/errors.hpp"
#include "riordan/polynomial.hpp"

namespace riordan {

// Rational function: a ratio of two Poly values.
//
// Canonical form is maintained when numerator and denominator are univariate
// in the same variable (or constant): they are divided by their gcd and the
// denominator is made monic.  Genuinely multivariate fractions are left
// unreduced apart from an exact-division collapse when the denominator
// happens to divide the numerator; equality always goes through
// cross-multiplication, so unreduced fractions still compare correctly.
class Frac {
public:
    Frac() : num_(), den_(Rat(1)) {}
    Frac(int c) : num_(Rat(c)), den_(Rat(1)) {}
    Frac(long c) : num_(Rat(c)), den_(Rat(1)) {}
    Frac(const Rat& c) : num_(c), den_(Rat(1)) {}
    Frac(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
    Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static Frac variable(Var v) { return Frac(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant() && den_.constant_value().is_one(); }

    // The fraction as a polynomial when the denominator divides out.
    std::optional<Poly> as_polynomial() const {
        if (is_polynomial()) return num_;
        return try_divide(num_, den_);
    }
    // Constant value when the fraction reduces to a constant.
    std::optional<Rat> as_rational() const {
        auto p = as_polynomial();
        if (!p || !p->is_constant()) return std::nullopt;
        return p->constant_value();
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        if (a.den_ == b.den_) return Frac(a.num_ - b.num_, a.den_);
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    Frac operator-() const {
        Frac r(*this);
        r.num_ = -r.num_;
        return r;
    }

    Frac inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Frac(den_, num_);
    }

    // Cross-multiplication equality, exact for unreduced fractions too.
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    Frac substitute(Var v, const Poly& value) const {
        return Frac(num_.substitute(v, value), den_.substitute(v, value));
    }

    Rat evaluate(const std::array<Rat, kVarCount>& point) const {
        Rat d = den_.evaluate(point);
        if (d.is_zero()) throw DivisionByZero("fraction denominator vanishes at evaluation point");
        return num_.evaluate(point) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.terms().size() > 1) n = "(" + n + ")";
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        if (den_.is_constant()) {
            Rat c = den_.constant_value();
            if (!c.is_one()) num_.scale(c.inverse());
            den_ = Poly(Rat(1));
            return;
        }
        unsigned mask = num_.var_mask() | den_.var_mask();
        if ((mask & (mask - 1)) == 0) {
            // Same single variable throughout; full gcd reduction.
            Poly g = gcd_univar(num_, den_);
            if (g.total_degree() > 0) {
                num_ = *try_divide(num_, g);
                den_ = *try_divide(den_, g);
            }
            if (den_.is_constant()) {
                Rat c = den_.constant_value();
                if (!c.is_one()) num_.scale(c.inverse());
                den_ = Poly(Rat(1));
            } else {
                Rat lc = den_.leading_term().second;
                if (!lc.is_one()) {
                    Rat inv = lc.inverse();
                    num_.scale(inv);
                    den_.scale(inv);
                }
            }
            return;
        }
        // Multivariate: collapse only when the division is exact.
        if (auto q = try_divide(num_, den_)) {
            num_ = std::move(*q);
            den_ = Poly(Rat(1));
        }
    }

    Poly num_, den_;
};

}  // namespace riordan
