#pragma once

#include <cmath>
#include <set>

#include "groebner.hpp"
#include "quotient.hpp"
#include "unipoly.hpp"

namespace chenruan {

// Linear form c1*u1 + ... + cr*ur on the torus Lie algebra, coefficients in
// the chosen M(tau) basis.
using EquivariantWeight = std::vector<Rational>;

inline EquivariantWeight weight_zero(int r) { return EquivariantWeight(r, Rational(0)); }

inline EquivariantWeight weight_add(const EquivariantWeight& a, const EquivariantWeight& b) {
    EquivariantWeight out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}
inline EquivariantWeight weight_neg(const EquivariantWeight& a) {
    EquivariantWeight out = a;
    for (auto& x : out) x = -x;
    return out;
}
inline bool weight_is_zero(const EquivariantWeight& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

struct FixedPointDatum {
    ConeKey cone;                                   // quotient-fan maximal cone (fan ray indices)
    Integer local_order;                            // |N(tau) / (projected ray span)|
    std::vector<EquivariantWeight> tangent_weights; // one per quotient dimension
    std::map<std::string, EquivariantWeight> bundle_weights;
};

namespace detail {
// 2-dimensional completeness: rays sorted by angle must chain the maximal
// cones around the full circle.
inline bool quotient_fan_complete_2d(const QuotientFanData& q) {
    std::vector<std::pair<double, int>> angles;
    for (const auto& [idx, v] : q.rays)
        angles.push_back({std::atan2(static_cast<double>(v[1]), static_cast<double>(v[0])), idx});
    std::sort(angles.begin(), angles.end());
    size_t n = angles.size();
    if (n < 3) return false;
    std::set<ConeKey> cones(q.max_cones.begin(), q.max_cones.end());
    for (size_t i = 0; i < n; ++i) {
        int a = angles[i].second, b = angles[(i + 1) % n].second;
        ConeKey key = {std::min(a, b), std::max(a, b)};
        if (!cones.count(key)) return false;
    }
    return cones.size() == n;
}

inline EquivariantWeight solve_weight_2d(const IntVec& w1, const IntVec& w2, const Rational& t1, const Rational& t2) {
    Rational det = Rational(w1[0]) * Rational(w2[1]) - Rational(w1[1]) * Rational(w2[0]);
    if (det == 0) throw std::domain_error("degenerate quotient cone");
    EquivariantWeight m(2);
    m[0] = (t1 * Rational(w2[1]) - t2 * Rational(w1[1])) / det;
    m[1] = (t2 * Rational(w1[0]) - t1 * Rational(w2[0])) / det;
    return m;
}
} // namespace detail

// One datum per maximal cone of the quotient fan: local group order is the
// index of the projected-ray span (rays kept at lattice length), tangent
// weights are the dual forms <m^i, ray_j> = delta_ij.
inline std::vector<FixedPointDatum> fixed_points(const QuotientFanData& q) {
    if (q.dim() != 2) throw std::invalid_argument("localization is validated for 2-dimensional quotients only");
    if (!detail::quotient_fan_complete_2d(q)) throw std::invalid_argument("quotient fan is not complete");
    std::vector<FixedPointDatum> out;
    for (const auto& cone : q.max_cones) {
        if (cone.size() != 2) throw std::invalid_argument("quotient maximal cone is not full-dimensional");
        const IntVec& w1 = q.rays.at(cone[0]);
        const IntVec& w2 = q.rays.at(cone[1]);
        FixedPointDatum d;
        d.cone = cone;
        Integer det = Integer(w1[0]) * Integer(w2[1]) - Integer(w1[1]) * Integer(w2[0]);
        d.local_order = det < 0 ? -det : det;
        d.tangent_weights.push_back(detail::solve_weight_2d(w1, w2, Rational(1), Rational(0)));
        d.tangent_weights.push_back(detail::solve_weight_2d(w1, w2, Rational(0), Rational(1)));
        out.push_back(std::move(d));
    }
    return out;
}

// Equivariant weight of the line bundle of a torus divisor sum(coeff_i D_i)
// at each fixed point: solve <-m, ray> = coeff on the cone, weight = -m.
inline std::map<ConeKey, EquivariantWeight> line_bundle_weights(const std::map<int, long>& divisor,
                                                                const QuotientFanData& q) {
    std::map<ConeKey, EquivariantWeight> out;
    for (const auto& cone : q.max_cones) {
        const IntVec& w1 = q.rays.at(cone[0]);
        const IntVec& w2 = q.rays.at(cone[1]);
        auto coeff = [&](int ray) {
            auto it = divisor.find(ray);
            return it == divisor.end() ? Rational(0) : Rational(it->second);
        };
        // -m solves the Cartier data on this cone
        EquivariantWeight minus_m = detail::solve_weight_2d(w1, w2, coeff(cone[0]), coeff(cone[1]));
        out[cone] = minus_m;
    }
    return out;
}

// Character of the rational function x_j / x_i on the quotient variety: the
// unique m with <m, ray_l> = delta_lj - delta_li over all star rays.
inline EquivariantWeight coordinate_ratio_character(int j, int i, const QuotientFanData& q) {
    std::vector<std::pair<int, Rational>> targets;
    for (const auto& [ray, coords] : q.rays) {
        Rational t(0);
        if (ray == j) t += 1;
        if (ray == i) t -= 1;
        targets.push_back({ray, t});
    }
    if (targets.size() < 2) throw std::invalid_argument("too few rays for a ratio character");
    EquivariantWeight m = detail::solve_weight_2d(q.rays.at(targets[0].first), q.rays.at(targets[1].first),
                                                  targets[0].second, targets[1].second);
    for (const auto& [ray, t] : targets) {
        const IntVec& v = q.rays.at(ray);
        if (m[0] * Rational(v[0]) + m[1] * Rational(v[1]) != t)
            throw std::domain_error("coordinate ratio is not a character on the quotient");
    }
    return m;
}

// Equivariant lift of the reduced obstruction bundle: weight 0 on the chart
// of base_ray, propagated through the transition characters (x_base/x_i)^pow.
// The fixed point of each maximal cone lies in the chart of the ray NOT in
// the cone.
inline std::map<ConeKey, EquivariantWeight> transition_lift_weights(int base_ray, long transition_power,
                                                                    const QuotientFanData& q) {
    std::map<ConeKey, EquivariantWeight> out;
    for (const auto& cone : q.max_cones) {
        int chart = -1;
        for (const auto& [ray, coords] : q.rays)
            if (!std::binary_search(cone.begin(), cone.end(), ray)) chart = ray;
        if (chart < 0) throw std::logic_error("no chart ray for a quotient cone");
        if (chart == base_ray) {
            out[cone] = weight_zero(q.dim());
            continue;
        }
        EquivariantWeight m = coordinate_ratio_character(base_ray, chart, q);
        for (auto& c : m) c *= Rational(transition_power);
        out[cone] = m;
    }
    return out;
}

struct LocalizationResult {
    std::vector<FixedPointDatum> data;
    std::vector<Rational> contributions_at_probe; // per fixed point, at a fixed probe value
    Rational constant;                            // the exact constant value of the sum
};

// Modified fixed-point sum: per fixed point, product of bundle weights over
// (local order) * (product of tangent weights), summed as an exact rational
// function of (u1, u2); the result must simplify to a constant.
inline LocalizationResult localized_integral(const std::vector<FixedPointDatum>& data,
                                             const std::vector<std::string>& bundle_names) {
    if (data.empty()) throw std::invalid_argument("no fixed points");
    size_t r = data[0].tangent_weights.size();
    size_t total_rank = bundle_names.size();
    if (total_rank != r)
        throw std::invalid_argument("total bundle rank must equal the quotient dimension for a top-degree integrand");

    const MonoOrder order = MonoOrder::grevlex();
    auto linear = [&](const EquivariantWeight& w) {
        std::vector<Term> terms;
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0) continue;
            Mono m(w.size(), 0);
            m[i] = 1;
            terms.push_back({std::move(m), w[i]});
        }
        return poly_from_terms(std::move(terms), order);
    };

    struct Contribution {
        Poly numerator;
        Poly denominator;
    };
    std::vector<Contribution> contribs;
    for (const auto& d : data) {
        Contribution c;
        c.numerator = poly_const(static_cast<int>(r), Rational(1));
        c.denominator = poly_const(static_cast<int>(r), Rational(d.local_order));
        int num_deg = 0, den_deg = 0;
        for (const auto& name : bundle_names) {
            auto it = d.bundle_weights.find(name);
            if (it == d.bundle_weights.end()) throw std::invalid_argument("missing bundle weight: " + name);
            if (weight_is_zero(it->second)) {
                c.numerator = poly_zero();
            } else {
                c.numerator = poly_mul(c.numerator, linear(it->second), order);
            }
            ++num_deg;
        }
        for (const auto& w : d.tangent_weights) {
            if (weight_is_zero(w)) throw std::domain_error("zero tangent weight at a fixed point");
            c.denominator = poly_mul(c.denominator, linear(w), order);
            ++den_deg;
        }
        if (num_deg != den_deg) throw std::logic_error("contribution is not degree zero");
        contribs.push_back(std::move(c));
    }

    // common denominator sum
    Poly common = poly_const(static_cast<int>(r), Rational(1));
    for (const auto& c : contribs) common = poly_mul(common, c.denominator, order);
    Poly numerator = poly_zero();
    for (size_t i = 0; i < contribs.size(); ++i) {
        if (contribs[i].numerator.is_zero()) continue;
        Poly part = contribs[i].numerator;
        for (size_t j = 0; j < contribs.size(); ++j)
            if (j != i) part = poly_mul(part, contribs[j].denominator, order);
        numerator = poly_add(numerator, part, order);
    }

    LocalizationResult out;
    out.data = data;
    if (numerator.is_zero()) {
        out.constant = Rational(0);
    } else {
        DivisionResult div = multi_divide(numerator, {common}, order);
        bool constant_quotient =
            div.remainder.is_zero() && div.quotients[0].terms.size() == 1 &&
            mono_degree(div.quotients[0].lt().mono) == 0;
        if (!constant_quotient)
            throw std::domain_error("fixed-point sum does not simplify to a constant: inconsistent equivariant lifts");
        out.constant = div.quotients[0].lt().coeff;
    }
    // probe evaluations for the report; step past probes hitting a weight zero
    const std::pair<long, long> probes[] = {{7, 3}, {11, 5}, {13, 6}, {17, 2}, {19, 10}};
    for (const auto& [p1, p2] : probes) {
        Rational u1(p1), u2(p2);
        auto ev = [&](const EquivariantWeight& w) -> Rational { return w[0] * u1 + w[1] * u2; };
        bool degenerate = false;
        std::vector<Rational> values;
        for (const auto& d : data) {
            Rational num(1), den(d.local_order);
            for (const auto& name : bundle_names) num *= ev(d.bundle_weights.at(name));
            for (const auto& w : d.tangent_weights) {
                Rational t = ev(w);
                if (t == 0) degenerate = true;
                den *= t;
            }
            if (degenerate) break;
            values.push_back(num / den);
        }
        if (!degenerate) {
            out.contributions_at_probe = std::move(values);
            break;
        }
    }
    return out;
}

// Count of X cap {three coordinate hyperplanes} on the quintic fixture: the
// residual equation has five simple roots identified by the full twist group.
inline long intersection_check_eta_cubed(const Fan& fan, const ConeKey& hyperplanes = {0, 1, 2}) {
    if (!fan.same_rays(Fan::mirror_quintic()))
        throw std::invalid_argument("transversal point count is implemented for the quintic fixture");
    if (hyperplanes.size() != 3) throw std::invalid_argument("need exactly three coordinate hyperplanes");
    // restriction of the defining polynomial: x_a^5 + x_b^5 with {a,b} the
    // surviving coordinates; psi-term vanishes on the stratum
    UniPoly f{{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}};
    UniPoly df{{Rational(0), Rational(0), Rational(0), Rational(0), Rational(5)}};
    if (unipoly_gcd(f, df).degree() != 0) throw std::logic_error("restricted equation not transversal");
    long roots = f.degree();
    long twists = 5; // a_d - a_e takes every residue with the sum-zero constraint
    return roots / twists;
}

} // namespace chenruan
