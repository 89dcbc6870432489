#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace chenruan {

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}
inline bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}
inline Mono mono_div(const Mono& a, const Mono& b) {
    Mono out(a);
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] -= b[i];
        if (out[i] < 0) throw std::domain_error("monomial quotient is not polynomial");
    }
    return out;
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

// Monomial orders. Elimination(k) is the block order that eliminates the
// first k variables: grevlex on the leading block, ties by grevlex on the rest.
class MonoOrder {
public:
    enum Kind { Grevlex, Lex, Elimination };

    static MonoOrder grevlex() { return MonoOrder(Grevlex, 0); }
    static MonoOrder lex() { return MonoOrder(Lex, 0); }
    static MonoOrder elimination(int leading_block) { return MonoOrder(Elimination, leading_block); }

    Kind kind() const { return kind_; }

    // strict a < b
    bool less(const Mono& a, const Mono& b) const {
        switch (kind_) {
            case Lex: {
                for (size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] < b[i];
                return false;
            }
            case Grevlex:
                return grevlex_less(a, b, 0, a.size());
            case Elimination: {
                size_t k = static_cast<size_t>(block_);
                if (grevlex_less(a, b, 0, k)) return true;
                if (grevlex_less(b, a, 0, k)) return false;
                return grevlex_less(a, b, k, a.size());
            }
        }
        return false;
    }
    bool greater(const Mono& a, const Mono& b) const { return less(b, a); }

private:
    MonoOrder(Kind k, int block) : kind_(k), block_(block) {}
    static bool grevlex_less(const Mono& a, const Mono& b, size_t lo, size_t hi) {
        int da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db;
        for (size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }

    Kind kind_;
    int block_;
};

struct Term {
    Mono mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept strictly descending
// with respect to the order each algorithm is run under; sort_terms
// re-establishes the invariant when switching orders.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const {
        if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms.front();
    }
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms) d = std::max(d, mono_degree(t.mono));
        return d;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms.size() != b.terms.size()) return false;
        for (size_t i = 0; i < a.terms.size(); ++i)
            if (a.terms[i].mono != b.terms[i].mono || a.terms[i].coeff != b.terms[i].coeff) return false;
        return true;
    }
};

inline void sort_terms(Poly& p, const MonoOrder& order) {
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const Term& x, const Term& y) { return order.greater(x.mono, y.mono); });
}

// Builds a normalized polynomial from unsorted, possibly repeated terms.
inline Poly poly_from_terms(std::vector<Term> raw, const MonoOrder& order) {
    Poly p;
    std::sort(raw.begin(), raw.end(), [&](const Term& x, const Term& y) { return order.greater(x.mono, y.mono); });
    for (auto& t : raw) {
        if (t.coeff == 0) continue;
        if (!p.terms.empty() && p.terms.back().mono == t.mono) {
            p.terms.back().coeff += t.coeff;
            if (p.terms.back().coeff == 0) p.terms.pop_back();
        } else {
            p.terms.push_back(std::move(t));
        }
    }
    return p;
}

inline Poly poly_zero() { return Poly{}; }

inline Poly poly_const(int nvars, const Rational& c) {
    Poly p;
    if (c != 0) p.terms.push_back({Mono(nvars, 0), c});
    return p;
}

inline Poly poly_monomial(Mono m, const Rational& c = Rational(1)) {
    Poly p;
    if (c != 0) p.terms.push_back({std::move(m), c});
    return p;
}

inline Poly poly_add(const Poly& a, const Poly& b, const MonoOrder& order) {
    Poly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].mono == b.terms[j].mono) {
            Rational c = a.terms[i].coeff + b.terms[j].coeff;
            if (c != 0) out.terms.push_back({a.terms[i].mono, std::move(c)});
            ++i, ++j;
        } else if (order.greater(a.terms[i].mono, b.terms[j].mono)) {
            out.terms.push_back(a.terms[i]);
            ++i;
        } else {
            out.terms.push_back(b.terms[j]);
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
    return out;
}

inline Poly poly_neg(const Poly& a) {
    Poly out = a;
    for (auto& t : out.terms) t.coeff = -t.coeff;
    return out;
}

inline Poly poly_sub(const Poly& a, const Poly& b, const MonoOrder& order) { return poly_add(a, poly_neg(b), order); }

// a - c * x^m * b, the division-step workhorse.
inline Poly poly_axpy(const Poly& a, const Rational& c, const Mono& m, const Poly& b, const MonoOrder& order) {
    Poly shifted;
    shifted.terms.reserve(b.terms.size());
    for (const auto& t : b.terms) shifted.terms.push_back({mono_mul(t.mono, m), -c * t.coeff});
    return poly_add(a, shifted, order);
}

inline Poly poly_scale(const Poly& a, const Rational& c) {
    if (c == 0) return poly_zero();
    Poly out = a;
    for (auto& t : out.terms) t.coeff *= c;
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b, const MonoOrder& order) {
    std::vector<Term> acc;
    acc.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) acc.push_back({mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
    return poly_from_terms(std::move(acc), order);
}

// Scales so the coefficients are coprime integers with positive lead.
inline void make_primitive(Poly& p) {
    if (p.is_zero()) return;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& t : p.terms) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.terms.front().coeff < 0) scale = -scale;
    for (auto& t : p.terms) t.coeff *= scale;
}

inline Poly poly_derivative(const Poly& p, size_t var, const MonoOrder& order) {
    std::vector<Term> acc;
    for (const auto& t : p.terms) {
        if (t.mono[var] == 0) continue;
        Mono m = t.mono;
        Rational c = t.coeff * Rational(m[var]);
        m[var] -= 1;
        acc.push_back({std::move(m), std::move(c)});
    }
    return poly_from_terms(std::move(acc), order);
}

inline Poly poly_pow(const Poly& base, unsigned e, const MonoOrder& order, int nvars) {
    Poly out = poly_const(nvars, Rational(1));
    Poly b = base;
    while (e) {
        if (e & 1) out = poly_mul(out, b, order);
        b = poly_mul(b, b, order);
        e >>= 1;
    }
    return out;
}

inline std::string poly_str(const Poly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < p.terms.size(); ++k) {
        const auto& t = p.terms[k];
        if (k) out += " + ";
        out += rat_str(t.coeff);
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            out += "*" + vars[i];
            if (t.mono[i] > 1) out += "^" + std::to_string(t.mono[i]);
        }
    }
    return out;
}

} // namespace chenruan
