#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

// Arbitrary-precision integer with value semantics, backed by GMP's mpz.
// Division truncates toward zero (C++ semantics); the remainder carries the
// sign of the dividend.
class Int {
public:
    Int() { mpz_init(v_); }
    Int(int n) : Int(static_cast<long>(n)) {}
    Int(long n) { mpz_init_set_si(v_, n); }
    Int(long long n) {
        mpz_init_set_si(v_, static_cast<long>(n >> 32));
        mpz_mul_2exp(v_, v_, 32);
        mpz_t lo;
        mpz_init_set_ui(lo, static_cast<unsigned long>(n & 0xffffffffLL));
        mpz_add(v_, v_, lo);
        mpz_clear(lo);
    }
    Int(unsigned long n) { mpz_init_set_ui(v_, n); }

    explicit Int(mpz_srcptr src) { mpz_init_set(v_, src); }

    explicit Int(std::string_view decimal) {
        std::string s(decimal);
        if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw std::invalid_argument("not a decimal integer: " + s);
        }
    }

    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_si(v_, 1) == 0; }
    int sign() const { return mpz_sgn(v_); }

    Int& operator+=(const Int& o) { mpz_add(v_, v_, o.v_); return *this; }
    Int& operator-=(const Int& o) { mpz_sub(v_, v_, o.v_); return *this; }
    Int& operator*=(const Int& o) { mpz_mul(v_, v_, o.v_); return *this; }

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }

    Int operator-() const {
        Int r;
        mpz_neg(r.v_, v_);
        return r;
    }

    friend Int operator/(const Int& a, const Int& b) {
        if (b.is_zero()) throw DivisionByZero();
        Int q;
        mpz_tdiv_q(q.v_, a.v_, b.v_);
        return q;
    }
    friend Int operator%(const Int& a, const Int& b) {
        if (b.is_zero()) throw DivisionByZero();
        Int r;
        mpz_tdiv_r(r.v_, a.v_, b.v_);
        return r;
    }

    // Quotient of an exact division; raises if b does not divide a.
    static Int divide_exact(const Int& a, const Int& b) {
        if (b.is_zero()) throw DivisionByZero();
        if (!mpz_divisible_p(a.v_, b.v_))
            throw std::domain_error("divide_exact: not divisible");
        Int q;
        mpz_divexact(q.v_, a.v_, b.v_);
        return q;
    }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        int c = mpz_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Int abs() const {
        Int r;
        mpz_abs(r.v_, v_);
        return r;
    }

    static Int gcd(const Int& a, const Int& b) {
        Int r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }

    static Int pow(const Int& base, unsigned long e) {
        Int r;
        mpz_pow_ui(r.v_, base.v_, e);
        return r;
    }

    static Int factorial(unsigned long n) {
        Int r;
        mpz_fac_ui(r.v_, n);
        return r;
    }

    static Int binomial(unsigned long n, unsigned long k) {
        Int r;
        mpz_bin_uiui(r.v_, n, k);
        return r;
    }

    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const { return mpz_get_si(v_); }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    mpz_srcptr raw() const { return v_; }

private:
    mpz_t v_;
};

}  // namespace riordan
