#pragma once

#include <functional>
#include <map>

#include "fan.hpp"

namespace chenruan {

// Element g_a of a local group, stored through its box point: home cone (the
// face whose interior holds the point), the nonzero weights a_i in (0,1)
// keyed by ray index, and the integral box point r_a = sum a_i * v_i.
struct GroupElement {
    std::map<int, Rational> weights; // ray index -> weight, all nonzero
    IntVec box_point;                // in N

    bool is_identity() const { return weights.empty(); }

    ConeKey home_cone() const {
        ConeKey c;
        for (const auto& [ray, w] : weights) c.push_back(ray);
        return c;
    }

    // Degree shifting number: sum of the chart rotation weights m_{i,g}/m_g.
    Rational degree_shift() const {
        Rational s(0);
        for (const auto& [ray, w] : weights) s += w;
        return s;
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.weights == b.weights; }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.weights < b.weights; }
};

inline GroupElement group_identity(int dim) {
    GroupElement g;
    g.box_point.assign(dim, 0);
    return g;
}

namespace detail {
inline GroupElement element_from_weights(const Fan& fan, std::map<int, Rational> weights) {
    GroupElement g;
    g.box_point.assign(fan.dim(), 0);
    std::vector<Rational> acc(fan.dim(), Rational(0));
    for (auto& [ray, w] : weights) {
        if (w == 0) continue;
        for (int j = 0; j < fan.dim(); ++j) acc[j] += w * Rational(fan.rays()[ray][j]);
        g.weights.emplace(ray, w);
    }
    for (int j = 0; j < fan.dim(); ++j) {
        if (!rat_is_integer(acc[j])) throw std::logic_error("box point is not integral");
        g.box_point[j] = static_cast<long>(acc[j].get_num().get_si());
    }
    return g;
}
} // namespace detail

// All of R(sigma): lattice points sum a_i f_i with 0 <= a_i < 1, enumerated
// over the integer bounding box of the fundamental parallelepiped.
inline std::vector<GroupElement> local_group(const Fan& fan, const Cone& sigma) {
    const int d = fan.dim();
    const auto& gens = sigma.generators;
    {
        Matrix<Rational> m;
        for (const auto& row : gens) {
            std::vector<Rational> r;
            for (long x : row) r.push_back(Rational(x));
            m.push_back(std::move(r));
        }
        if (!m.empty() && mat_rank(m) != gens.size()) throw std::invalid_argument("non-simplicial cone");
    }
    std::vector<GroupElement> out;
    if (sigma.rays.empty()) {
        out.push_back(group_identity(d));
        return out;
    }
    IntVec lo(d, 0), hi(d, 0);
    for (int j = 0; j < d; ++j) {
        for (const auto& row : gens) {
            if (row[j] < 0) lo[j] += row[j];
            else hi[j] += row[j];
        }
    }
    IntVec pt(d);
    std::function<void(int)> rec = [&](int j) {
        if (j == d) {
            std::vector<Rational> target;
            for (long x : pt) target.push_back(Rational(x));
            auto sol = solve_in_span(gens, target);
            if (!sol) return;
            std::map<int, Rational> w;
            for (size_t i = 0; i < sol->size(); ++i) {
                const Rational& a = (*sol)[i];
                if (a < 0 || a >= 1) return;
                if (a != 0) w[sigma.rays[i]] = a;
            }
            out.push_back(detail::element_from_weights(fan, std::move(w)));
            return;
        }
        for (long v = lo[j]; v <= hi[j]; ++v) {
            pt[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// R(tau) cap Int(tau): box points with every weight strictly positive.
inline std::vector<GroupElement> interior_box_points(const Fan& fan, const Cone& tau) {
    std::vector<GroupElement> out;
    for (auto& g : local_group(fan, tau))
        if (g.weights.size() == tau.rays.size()) out.push_back(std::move(g));
    return out;
}

// Product inside a common local group. The supports must span a fan cone.
inline GroupElement group_mul(const Fan& fan, const GroupElement& a, const GroupElement& b) {
    auto span = fan.span(a.home_cone(), b.home_cone());
    if (!span) throw std::invalid_argument("group elements have no common chart");
    std::map<int, Rational> w = a.weights;
    for (const auto& [ray, x] : b.weights) {
        auto [it, inserted] = w.emplace(ray, x);
        if (!inserted) it->second += x;
    }
    for (auto it = w.begin(); it != w.end();) {
        it->second = rat_mod1(it->second);
        it = (it->second == 0) ? w.erase(it) : std::next(it);
    }
    return detail::element_from_weights(fan, std::move(w));
}

inline GroupElement group_inverse(const Fan& fan, const GroupElement& a) {
    std::map<int, Rational> w;
    for (const auto& [ray, x] : a.weights) w[ray] = Rational(1) - x;
    return detail::element_from_weights(fan, std::move(w));
}

// Order of g in the local group (lcm of the weight denominators).
inline long element_order(const GroupElement& g) {
    Integer l = 1;
    for (const auto& [ray, w] : g.weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den().get_mpz_t());
    return l.get_si();
}

// The diagonal-chart representation of g on a maximal cone sigma containing
// its home cone: weights in [0,1) per sigma ray, zeros included.
inline std::vector<Rational> chart_weights(const GroupElement& g, const Cone& sigma) {
    std::vector<Rational> out;
    for (int ray : sigma.rays) {
        auto it = g.weights.find(ray);
        out.push_back(it == g.weights.end() ? Rational(0) : it->second);
    }
    return out;
}

} // namespace chenruan
