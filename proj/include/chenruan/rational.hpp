#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace chenruan {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: reduced, denominator > 0, zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Parses "p", "-p/q" with arbitrary precision digits.
inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

// Canonical "p" / "p/q" rendering used by every JSON report.
inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double rat_double(const Rational& r) { return r.get_d(); }

inline bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer rat_floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// Fractional part in [0, 1).
inline Rational rat_mod1(const Rational& r) {
    Rational f = r - Rational(rat_floor(r));
    f.canonicalize();
    return f;
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational out(1);
    Rational b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline long rat_to_long(const Rational& r) {
    if (!rat_is_integer(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("expected small integer, got " + rat_str(r));
    return r.get_num().get_si();
}

} // namespace chenruan
