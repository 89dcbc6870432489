#pragma once

#include <vector>

#include "rational.hpp"

namespace chenruan {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// Supports just enough for cyclotomic moduli, gcds and small charpolys.
struct UniPoly {
    std::vector<Rational> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(const Rational& r) { return UniPoly{{r}}; }
    // x^k
    static UniPoly monomial(int k, const Rational& r = Rational(1)) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = r;
        return UniPoly{std::move(v)};
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Rational& lead() const { return c.back(); }

    Rational at(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Rational(0); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
        return UniPoly{std::move(v)};
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) v[i] -= b.c[i];
        return UniPoly{std::move(v)};
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rational> v(a.c.size() + b.c.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
        }
        return UniPoly{std::move(v)};
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        std::vector<Rational> v(a.c);
        for (auto& x : v) x *= s;
        return UniPoly{std::move(v)};
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
};

// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<UniPoly, UniPoly> unipoly_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("univariate division by zero");
    UniPoly r = a;
    std::vector<Rational> q(std::max<int>(a.degree() - b.degree() + 1, 0), Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational f = r.lead() / b.lead();
        q[k] = f;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    return {UniPoly{std::move(q)}, r};
}

inline UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = unipoly_divmod(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = (Rational(1) / a.lead()) * a; // monic
    return a;
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
inline std::tuple<UniPoly, UniPoly, UniPoly> unipoly_xgcd(UniPoly a, UniPoly b) {
    UniPoly u0 = UniPoly::constant(Rational(1)), v0 = UniPoly::zero();
    UniPoly u1 = UniPoly::zero(), v1 = UniPoly::constant(Rational(1));
    while (!b.is_zero()) {
        auto [q, r] = unipoly_divmod(a, b);
        a = b;
        b = r;
        UniPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    if (!a.is_zero()) {
        Rational inv = Rational(1) / a.lead();
        a = inv * a;
        u0 = inv * u0;
        v0 = inv * v0;
    }
    return {a, u0, v0};
}

// n-th cyclotomic polynomial, by dividing x^n - 1 by the proper-divisor ones.
inline UniPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    UniPoly acc = UniPoly::monomial(n) - UniPoly::constant(Rational(1));
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = unipoly_divmod(acc, cyclotomic_polynomial(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic recursion failed");
        acc = q;
    }
    return acc;
}

} // namespace chenruan
