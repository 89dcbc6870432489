#pragma once

#include <optional>
#include <set>

#include "multipoly.hpp"

namespace chenruan {

struct DivisionResult {
    std::vector<Poly> quotients;
    Poly remainder;
};

// Multivariate division: g = sum q_i * d_i + r, no term of r divisible by any
// leading term of the divisors. Deterministic: first divisor whose leading
// term divides wins.
inline DivisionResult multi_divide(const Poly& g, const std::vector<Poly>& divisors, const MonoOrder& order) {
    for (const auto& d : divisors)
        if (d.is_zero()) throw std::invalid_argument("zero divisor in division");
    DivisionResult out;
    out.quotients.assign(divisors.size(), poly_zero());
    Poly work = g;
    std::vector<size_t> ti(divisors.size(), 0);
    while (!work.is_zero()) {
        const Term& top = work.lt();
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            const Term& dlt = divisors[i].lt();
            if (!mono_divides(dlt.mono, top.mono)) continue;
            Mono shift = mono_div(top.mono, dlt.mono);
            Rational f = top.coeff / dlt.coeff;
            out.quotients[i] = poly_add(out.quotients[i], poly_monomial(shift, f), order);
            work = poly_axpy(work, f, shift, divisors[i], order);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.terms.push_back(top);
            work.terms.erase(work.terms.begin());
        }
    }
    return out;
}

// Remainder-only reduction.
inline Poly normal_form(const Poly& g, const std::vector<Poly>& basis, const MonoOrder& order) {
    Poly rem;
    Poly work = g;
    while (!work.is_zero()) {
        const Term& top = work.lt();
        bool reduced = false;
        for (const auto& b : basis) {
            if (!mono_divides(b.lt().mono, top.mono)) continue;
            work = poly_axpy(work, top.coeff / b.lt().coeff, mono_div(top.mono, b.lt().mono), b, order);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.push_back(top);
            work.terms.erase(work.terms.begin());
        }
    }
    return rem;
}

inline Poly s_polynomial(const Poly& f, const Poly& g, const MonoOrder& order) {
    Mono l = mono_lcm(f.lt().mono, g.lt().mono);
    Poly a = poly_axpy(poly_zero(), -Rational(1) / f.lt().coeff, mono_div(l, f.lt().mono), f, order);
    Poly b = poly_axpy(poly_zero(), -Rational(1) / g.lt().coeff, mono_div(l, g.lt().mono), g, order);
    return poly_sub(a, b, order);
}

// Buchberger with the coprime and chain criteria, returning the reduced basis
// (monic leads scaled to primitive integer coefficients).
inline std::vector<Poly> groebner_basis(std::vector<Poly> gens, const MonoOrder& order) {
    std::vector<Poly> g;
    for (auto& p : gens) {
        if (p.is_zero()) continue;
        sort_terms(p, order);
        make_primitive(p);
        g.push_back(std::move(p));
    }
    if (g.empty()) throw std::invalid_argument("groebner basis of the zero ideal");

    struct Pair {
        size_t i, j;
        Mono lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) { return order.less(a.lcm, b.lcm); };
    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) pairs.push_back({i, j, mono_lcm(g[i].lt().mono, g[j].lt().mono)});
    };
    for (size_t j = 0; j < g.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        const Mono& li = g[p.i].lt().mono;
        const Mono& lj = g[p.j].lt().mono;
        if (p.lcm == mono_mul(li, lj)) continue; // coprime leads
        // chain criterion: a third basis element dividing the lcm, whose pairs
        // with both ends are no longer queued
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(g[k].lt().mono, p.lcm)) continue;
            bool ik_pending = false, jk_pending = false;
            for (const auto& q : pairs) {
                if ((q.i == p.i && q.j == k) || (q.i == k && q.j == p.i)) ik_pending = true;
                if ((q.i == p.j && q.j == k) || (q.i == k && q.j == p.j)) jk_pending = true;
            }
            if (!ik_pending && !jk_pending) skip = true;
        }
        if (skip) continue;
        Poly s = normal_form(s_polynomial(g[p.i], g[p.j], order), g, order);
        if (s.is_zero()) continue;
        make_primitive(s);
        g.push_back(std::move(s));
        push_pairs(g.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Poly> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!mono_divides(g[j].lt().mono, g[i].lt().mono)) continue;
            if (g[j].lt().mono == g[i].lt().mono && j > i) continue; // keep the first of equal leads
            redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // inter-reduce tails
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
        make_primitive(r);
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Poly& a, const Poly& b) { return order.less(a.lt().mono, b.lt().mono); });
    return reduced;
}

inline bool in_ideal(const Poly& p, const std::vector<Poly>& gb, const MonoOrder& order) {
    return normal_form(p, gb, order).is_zero();
}

namespace detail {
inline Poly insert_front_variable(const Poly& p, int t_exponent) {
    Poly out;
    out.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) {
        Mono m(t.mono.size() + 1, 0);
        m[0] = t_exponent;
        std::copy(t.mono.begin(), t.mono.end(), m.begin() + 1);
        out.terms.push_back({std::move(m), t.coeff});
    }
    return out;
}
inline Poly drop_front_variable(const Poly& p) {
    Poly out;
    for (const auto& t : p.terms) {
        if (t.mono[0] != 0) throw std::logic_error("dropping a live variable");
        out.terms.push_back({Mono(t.mono.begin() + 1, t.mono.end()), t.coeff});
    }
    return out;
}
} // namespace detail

// Generators of <gens> cap <h> via the auxiliary-variable elimination
//   t*gens + (1-t)*h, eliminate t.
inline std::vector<Poly> ideal_intersection_principal(const std::vector<Poly>& gens, const Poly& h,
                                                      const MonoOrder& inner_order) {
    MonoOrder elim = MonoOrder::elimination(1);
    std::vector<Poly> aug;
    for (const auto& p : gens) {
        Poly q = detail::insert_front_variable(p, 1);
        sort_terms(q, elim);
        aug.push_back(std::move(q));
    }
    Poly th = detail::insert_front_variable(h, 1);
    Poly h0 = detail::insert_front_variable(h, 0);
    Poly mixer = poly_sub(h0, th, elim); // (1 - t) * h
    sort_terms(mixer, elim);
    aug.push_back(std::move(mixer));
    std::vector<Poly> gb = groebner_basis(aug, elim);
    std::vector<Poly> kept;
    for (const auto& p : gb) {
        bool has_t = false;
        for (const auto& t : p.terms)
            if (t.mono[0] != 0) has_t = true;
        if (!has_t) {
            Poly q = detail::drop_front_variable(p);
            sort_terms(q, inner_order);
            kept.push_back(std::move(q));
        }
    }
    return kept;
}

// Ideal quotient <gens> : h, returned as a reduced Groebner basis.
// Postcondition (checked by callers/tests): h * (every output gen) in <gens>.
inline std::vector<Poly> ideal_quotient(const std::vector<Poly>& gens, const Poly& h, const MonoOrder& order) {
    if (h.is_zero()) throw std::invalid_argument("ideal quotient by zero");
    std::vector<Poly> inter = ideal_intersection_principal(gens, h, order);
    std::vector<Poly> quol;
    for (const auto& p : inter) {
        DivisionResult d = multi_divide(p, {h}, order);
        if (!d.remainder.is_zero()) throw std::logic_error("intersection element not divisible by h");
        quol.push_back(d.quotients[0]);
    }
    return groebner_basis(quol, order);
}

} // namespace chenruan
