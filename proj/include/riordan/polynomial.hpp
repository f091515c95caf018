#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// Sparse multivariate polynomial over a closed variable universe
// {x, alpha, beta, t} with exact rational coefficients.
//
// Terms are kept in canonical graded-lexicographic order (total degree first,
// then exponents in the fixed variable order), and zero coefficients are
// never stored, so equality is structural.

enum class Var : int { x = 0, alpha = 1, beta = 2, t = 3 };

inline constexpr int kVarCount = 4;

inline constexpr const char* var_name(Var v) {
    constexpr const char* names[kVarCount] = {"x", "alpha", "beta", "t"};
    return names[static_cast<int>(v)];
}

inline std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kVarCount; ++i)
        if (name == var_name(static_cast<Var>(i))) return static_cast<Var>(i);
    return std::nullopt;
}

struct Monomial {
    std::array<std::uint32_t, kVarCount> exp{};

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool is_constant() const { return degree() == 0; }

    std::uint32_t operator[](Var v) const { return exp[static_cast<int>(v)]; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i) {
            std::uint64_t e = std::uint64_t(exp[i]) + o.exp[i];
            if (e > 0xffffffffULL) throw ExponentOverflow();
            r.exp[i] = static_cast<std::uint32_t>(e);
        }
        return r;
    }

    // Componentwise divisibility; quotient when it exists.
    std::optional<Monomial> divide(const Monomial& by) const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i) {
            if (exp[i] < by.exp[i]) return std::nullopt;
            r.exp[i] = exp[i] - by.exp[i];
        }
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic: lower total degree first, ties broken by the fixed
// variable order (x before alpha before beta before t).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonomialLess>;

    Poly() = default;
    Poly(int c) : Poly(Rat(c)) {}
    Poly(long c) : Poly(Rat(c)) {}
    Poly(const Rat& c) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }

    static Poly variable(Var v) {
        Monomial m;
        m.exp[static_cast<int>(v)] = 1;
        Poly p;
        p.terms_.emplace(m, Rat(1));
        return p;
    }

    static Poly term(const Rat& c, const Monomial& m) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    // Value of a constant polynomial (zero polynomial gives 0).
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    std::uint64_t total_degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
    }
    std::uint32_t degree_in(Var v) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
        return d;
    }

    // Bitmask of variables that actually occur.
    unsigned var_mask() const {
        unsigned mask = 0;
        for (const auto& [m, c] : terms_)
            for (int i = 0; i < kVarCount; ++i)
                if (m.exp[i] > 0) mask |= 1u << i;
        return mask;
    }
    // The single variable in use, if at most one occurs (nullopt = constant).
    std::optional<Var> sole_var() const {
        unsigned mask = var_mask();
        if (mask == 0) return std::nullopt;
        if ((mask & (mask - 1)) != 0) throw MultivariateInput();
        int i = 0;
        while (!(mask & (1u << i))) ++i;
        return static_cast<Var>(i);
    }
    bool is_univariate_or_constant() const {
        unsigned mask = var_mask();
        return (mask & (mask - 1)) == 0;
    }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const Rat& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [m, k] : terms_) k *= c;
        }
        return *this;
    }
    friend Poly operator*(Poly p, const Rat& c) { return p.scale(c); }
    friend Poly operator*(const Rat& c, Poly p) { return p.scale(c); }

    Poly pow(std::uint32_t e) const {
        Poly r(Rat(1));
        Poly base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // Dense coefficient vector by degree in v; requires the polynomial to use
    // no variable other than v.
    std::vector<Rat> dense_univar(Var v) const {
        std::vector<Rat> out(degree_in(v) + 1, Rat(0));
        for (const auto& [m, c] : terms_) {
            for (int i = 0; i < kVarCount; ++i)
                if (i != static_cast<int>(v) && m.exp[i] > 0) throw MultivariateInput();
            out[m[v]] = c;
        }
        return out;
    }

    static Poly from_dense_univar(Var v, std::span<const Rat> coeffs) {
        Poly p;
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            if (coeffs[d].is_zero()) continue;
            Monomial m;
            m.exp[static_cast<int>(v)] = static_cast<std::uint32_t>(d);
            p.terms_.emplace(m, coeffs[d]);
        }
        return p;
    }

    Poly substitute(Var v, const Poly& value) const {
        // Horner on the v-degree would need a dense split; power table is
        // simpler and the degrees here are small.
        std::uint32_t dmax = degree_in(v);
        std::vector<Poly> powers;
        powers.reserve(dmax + 1);
        powers.push_back(Poly(Rat(1)));
        for (std::uint32_t d = 1; d <= dmax; ++d) powers.push_back(powers.back() * value);
        Poly r;
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            std::uint32_t e = rest.exp[static_cast<int>(v)];
            rest.exp[static_cast<int>(v)] = 0;
            r += Poly::term(c, rest) * powers[e];
        }
        return r;
    }

    Rat evaluate(const std::array<Rat, kVarCount>& point) const {
        Rat r(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < kVarCount; ++i)
                for (std::uint32_t e = 0; e < m.exp[i]; ++e) t *= point[i];
            r += t;
        }
        return r;
    }

    // Leading (graded-lex greatest) term.
    std::pair<Monomial, Rat> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// Exact quotient num/den, or nullopt when den does not divide num.
// Long division on graded-lex leading terms: if the division is exact the
// leading term of every partial remainder is divisible by lt(den), so a
// single failed step proves inexactness.
inline std::optional<Poly> try_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return Poly();
    Poly q, rem = num;
    auto [dm, dc] = den.leading_term();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term();
        auto m = rm.divide(dm);
        if (!m) return std::nullopt;
        Poly t = Poly::term(rc / dc, *m);
        q += t;
        rem -= t * den;
    }
    return q;
}

// Monic gcd of two polynomials that are univariate in the same variable (or
// constant).  gcd(0,0) = 0; any nonzero constant input makes the gcd 1.
inline Poly gcd_univar(const Poly& a, const Poly& b) {
    if (!a.is_univariate_or_constant() || !b.is_univariate_or_constant())
        throw MultivariateInput("gcd_univar: input uses more than one variable");
    if (a.is_zero() && b.is_zero()) return Poly();

    auto va = a.is_constant() ? std::nullopt : a.sole_var();
    auto vb = b.is_constant() ? std::nullopt : b.sole_var();
    if (va && vb && *va != *vb)
        throw MultivariateInput("gcd_univar: inputs use different variables");
    if (!va && !vb) return Poly(Rat(1));  // both nonzero constants (or one zero)
    Var v = va ? *va : *vb;

    auto da = a.dense_univar(v);
    auto db = b.dense_univar(v);
    auto strip = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    strip(da);
    strip(db);
    // Euclidean remainder sequence over Q, monic-normalized each round.
    auto make_monic = [](std::vector<Rat>& p) {
        if (p.empty()) return;
        Rat lc = p.back();
        for (auto& c : p) c /= lc;
    };
    while (!db.empty()) {
        // da mod db
        make_monic(db);
        while (da.size() >= db.size() && !da.empty()) {
            Rat f = da.back();
            std::size_t shift = da.size() - db.size();
            for (std::size_t i = 0; i < db.size(); ++i) da[shift + i] -= f * db[i];
            strip(da);
        }
        std::swap(da, db);
    }
    make_monic(da);
    return Poly::from_dense_univar(v, da);
}

inline std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? "-" : "+");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (m.is_constant() || !a.is_one()) {
            os << a.to_string();
            printed_coeff = true;
        }
        for (int i = 0; i < kVarCount; ++i) {
            if (m.exp[i] == 0) continue;
            if (printed_coeff) os << "*";
            os << var_name(static_cast<Var>(i));
            if (m.exp[i] > 1) os << "^" << m.exp[i];
            printed_coeff = true;
        }
    }
    return os.str();
}

}  // namespace riordan
