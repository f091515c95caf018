#pragma once

#include <gmp.h>

#include <compare>
#include <string>
#include <string_view>

#include "riordan/errors.hpp"
#include "riordan/integer.hpp"

namespace riordan {

// Exact rational number.  Always kept canonical: denominator > 0 and
// gcd(|num|, den) = 1, re-established after every operation.
class Rat {
public:
    Rat() { mpq_init(v_); }
    Rat(int n) : Rat(static_cast<long>(n)) {}
    Rat(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rat(long num, long den) {
        if (den == 0) throw DivisionByZero();
        if (den < 0) {
            num = -num;
            den = -den;
        }
        mpq_init(v_);
        mpq_set_si(v_, num, static_cast<unsigned long>(den));
        mpq_canonicalize(v_);
    }
    explicit Rat(const Int& n) {
        mpq_init(v_);
        mpq_set_z(v_, n.raw());
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw DivisionByZero();
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    // Accepts "p" or "p/q", decimal with optional leading '-'.
    explicit Rat(std::string_view text) {
        std::string s(text);
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw std::invalid_argument("not a rational: " + s);
        }
        mpq_canonicalize(v_);
    }

    Rat(const Rat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rat() { mpq_clear(v_); }

    Int num() const { return Int(mpq_numref(v_)); }
    Int den() const { return Int(mpq_denref(v_)); }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    Rat& operator+=(const Rat& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DivisionByZero();
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    Rat operator-() const {
        Rat r;
        mpq_neg(r.v_, v_);
        return r;
    }

    Rat inverse() const {
        if (is_zero()) throw DivisionByZero();
        Rat r;
        mpq_inv(r.v_, v_);
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = mpq_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    static Rat factorial(unsigned long n) { return Rat(Int::factorial(n)); }
    static Rat binomial(unsigned long n, unsigned long k) { return Rat(Int::binomial(n, k)); }

    std::string to_string() const {
        std::string s = num().to_string();
        if (!is_integer()) s += "/" + den().to_string();
        return s;
    }

private:
    mpq_t v_;
};

}  // namespace riordan
