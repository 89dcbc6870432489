#pragma once

#include <functional>

#include "group.hpp"
#include "unipoly.hpp"

namespace chenruan {

// Per-geometry Hodge numbers fed into the orbifold sum. Entries are cited
// inputs, not computed here.
struct HodgeFixture {
    std::map<std::pair<int, int>, long> ambient;     // untwisted sector of X
    std::map<std::pair<int, int>, long> curve;       // genus-zero sector curve
    std::map<std::pair<int, int>, long> point;       // sector point

    static HodgeFixture mirror_quintic() {
        HodgeFixture h;
        h.ambient = {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1},
                     {{3, 0}, 1}, {{0, 3}, 1}, {{2, 1}, 1}, {{1, 2}, 1}};
        h.curve = {{{0, 0}, 1}, {{1, 1}, 1}};
        h.point = {{{0, 0}, 1}};
        return h;
    }

    bool symmetric() const {
        auto sym = [](const std::map<std::pair<int, int>, long>& t) {
            for (const auto& [pq, v] : t) {
                auto it = t.find({pq.second, pq.first});
                if (it == t.end() || it->second != v) return false;
            }
            return true;
        };
        return sym(ambient) && sym(curve) && sym(point);
    }
};

// A twisted sector of the hypersurface: one group element, its home cone,
// the sector geometry and degree shift.
struct TwistedSector {
    GroupElement g;
    ConeKey home;
    int dim = 0; // complex dimension of X_(g)
    Rational shift;
};

enum class SectorType { Identity, Curve, PointI, PointII };

inline const char* sector_type_name(SectorType t) {
    switch (t) {
        case SectorType::Identity: return "identity";
        case SectorType::Curve: return "curve";
        case SectorType::PointI: return "point-i";
        case SectorType::PointII: return "point-ii";
    }
    return "?";
}

// Tricyclic sector indexed by the ordered pair (g1, g2); g3 = (g1 g2)^{-1}.
struct TricyclicSector {
    GroupElement g1, g2, g3;
    ConeKey tau1, tau2;
    ConeKey support;          // span cone of tau1 union tau2
    int dim = 0;              // complex dimension of X_(g)
    long components = 1;      // connected components of the support locus
    Rational shifts[3];
    Rational rank;            // rank formula: dim X_(g) - dim X + sum shifts
    SectorType type = SectorType::Identity;
    bool census_nonzero = false; // member of the nonzero 3-point census

    Rational shift_sum() const { return shifts[0] + shifts[1] + shifts[2]; }
};

struct SectorCensus {
    long ordered_nonzero = 0;   // census pairs (g1,g2), both nontrivial
    long type_i = 0;
    long type_ii = 0;
    long unordered_nonzero = 0; // census pairs up to swapping g1 <-> g2
    long rank_zero_pairs = 0;   // every point-support pair with rank 0
    long curve_sectors = 0;     // tau1 = tau2 two-dimensional
    long point_sectors = 0;
    long total = 0;
};

// Number of connected components of X cap closure(O_sigma) for a
// three-dimensional sigma in the mirror-quintic fan: the restricted equation
// x_a^5 + x_b^5 = 0 has five simple projective roots forming a single orbit
// under the residual diagonal twists.
inline long quintic_point_components(const Fan& fan, const ConeKey& span) {
    ConeKey rest;
    for (int i = 0; i < static_cast<int>(fan.rays().size()); ++i)
        if (!std::binary_search(span.begin(), span.end(), i)) rest.push_back(i);
    if (rest.size() != 2) throw std::invalid_argument("expected a codimension-3 stratum");
    // restricted equation t^5 + 1 = 0 in t = x_a/x_b; simple roots:
    UniPoly f{{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}};
    UniPoly df{{Rational(0), Rational(0), Rational(0), Rational(0), Rational(5)}};
    if (unipoly_gcd(f, df).degree() != 0) throw std::logic_error("restricted quintic is not squarefree");
    long roots = f.degree();
    // twists t -> zeta^(a - b) t achievable inside the fan's torus quotient:
    // all residues mod 5, acting freely on the roots.
    long twists = 5;
    return roots / twists;
}

struct SectorEnumeration {
    std::vector<TricyclicSector> sectors;
    SectorCensus census;
};

// Tricyclic sectors of the ambient toric variety: every ordered pair of
// interior box points over cone pairs whose union spans a fan cone.
inline std::vector<TricyclicSector> enumerate_tricyclic_toric(const Fan& fan) {
    std::vector<TricyclicSector> out;
    std::map<ConeKey, std::vector<GroupElement>> interiors;
    for (const auto& key : fan.cones()) interiors[key] = interior_box_points(fan, fan.cone(key));
    for (const auto& [t1, int1] : interiors) {
        for (const auto& [t2, int2] : interiors) {
            auto span = fan.span(t1, t2);
            if (!span) continue;
            for (const auto& g1 : int1) {
                for (const auto& g2 : int2) {
                    TricyclicSector s;
                    s.g1 = g1;
                    s.g2 = g2;
                    s.g3 = group_inverse(fan, group_mul(fan, g1, g2));
                    s.tau1 = t1;
                    s.tau2 = t2;
                    s.support = span->rays;
                    s.dim = fan.dim() - span->dim();
                    s.shifts[0] = g1.degree_shift();
                    s.shifts[1] = g2.degree_shift();
                    s.shifts[2] = s.g3.degree_shift();
                    s.rank = Rational(s.dim - fan.dim()) + s.shift_sum();
                    out.push_back(std::move(s));
                }
            }
        }
    }
    return out;
}

// Tricyclic sectors of a nondegenerate quasi-smooth Calabi-Yau hypersurface:
// the span must have codimension >= 1 for the stratum to meet X, and sector
// dimension drops by one. Census convention for "nonzero 3-point function":
// a pair with both elements nontrivial and shift sum 3 on a point support
// counts when g3 is trivial (type ii) or the home cone of g3 is
// three-dimensional (type i, equivalently the shift of (g1 g2) is 2).
inline SectorEnumeration enumerate_tricyclic_hypersurface(const Fan& fan, bool calabi_yau = true) {
    (void)calabi_yau; // quasi-smooth + nondegenerate assumed, not verified
    SectorEnumeration result;
    const bool quintic = fan.same_rays(Fan::mirror_quintic());
    std::map<ConeKey, std::vector<GroupElement>> interiors;
    for (const auto& key : fan.cones()) interiors[key] = interior_box_points(fan, fan.cone(key));
    const int d_hyp = fan.dim() - 1;
    for (const auto& [t1, int1] : interiors) {
        for (const auto& [t2, int2] : interiors) {
            auto span = fan.span(t1, t2);
            if (!span) continue;
            int codim = fan.dim() - span->dim();
            if (codim == 0) continue; // closed stratum misses the hypersurface
            for (const auto& g1 : int1) {
                for (const auto& g2 : int2) {
                    TricyclicSector s;
                    s.g1 = g1;
                    s.g2 = g2;
                    s.g3 = group_inverse(fan, group_mul(fan, g1, g2));
                    s.tau1 = t1;
                    s.tau2 = t2;
                    s.support = span->rays;
                    s.dim = codim - 1;
                    s.shifts[0] = g1.degree_shift();
                    s.shifts[1] = g2.degree_shift();
                    s.shifts[2] = s.g3.degree_shift();
                    s.rank = Rational(s.dim - d_hyp) + s.shift_sum();
                    if (g1.is_identity() && g2.is_identity()) {
                        s.type = SectorType::Identity;
                    } else if (s.dim == 1) {
                        s.type = SectorType::Curve;
                    } else if (s.g3.is_identity()) {
                        s.type = SectorType::PointII;
                    } else {
                        s.type = SectorType::PointI;
                    }
                    if (s.dim == 0 && quintic) s.components = quintic_point_components(fan, s.support);
                    bool nontrivial_pair = !g1.is_identity() && !g2.is_identity();
                    if (s.dim == 0) {
                        result.census.point_sectors++;
                        if (s.rank == 0) {
                            result.census.rank_zero_pairs++;
                            if (nontrivial_pair &&
                                (s.g3.is_identity() || s.g3.home_cone().size() == 3)) {
                                s.census_nonzero = true;
                                result.census.ordered_nonzero++;
                                if (s.g3.is_identity()) result.census.type_ii++;
                                else result.census.type_i++;
                            }
                        }
                    } else if (s.dim == 1 && s.tau1 == s.tau2 && span->dim() == 2) {
                        result.census.curve_sectors++;
                    }
                    result.sectors.push_back(std::move(s));
                }
            }
        }
    }
    result.census.total = static_cast<long>(result.sectors.size());
    // unordered census: swap-symmetric predicate, so count diagonal + half
    long diag = 0;
    for (const auto& s : result.sectors)
        if (s.census_nonzero && s.g1 == s.g2) ++diag;
    result.census.unordered_nonzero = (result.census.ordered_nonzero - diag) / 2 + diag;
    return result;
}

// Twisted (one-element) sectors of the hypersurface.
inline std::vector<TwistedSector> enumerate_twisted_hypersurface(const Fan& fan) {
    std::vector<TwistedSector> out;
    for (const auto& key : fan.cones()) {
        int codim = fan.dim() - static_cast<int>(key.size());
        if (codim == 0) continue;
        for (auto& g : interior_box_points(fan, fan.cone(key))) {
            TwistedSector s;
            s.home = key;
            s.dim = codim - 1;
            s.shift = g.degree_shift();
            s.g = std::move(g);
            out.push_back(std::move(s));
        }
    }
    return out;
}

// Orbifold Hodge numbers: untwisted table plus every twisted sector shifted
// by its degree shifting number.
inline std::map<std::pair<int, int>, long> orbifold_betti(const Fan& fan, const HodgeFixture& hodge) {
    std::map<std::pair<int, int>, long> out = hodge.ambient;
    for (const auto& s : enumerate_twisted_hypersurface(fan)) {
        if (s.g.is_identity()) continue;
        if (!rat_is_integer(s.shift)) throw std::logic_error("non-integral shift on a Calabi-Yau chart");
        int iota = static_cast<int>(rat_to_long(s.shift));
        const std::map<std::pair<int, int>, long>* table = nullptr;
        if (s.dim == 1) table = &hodge.curve;
        else if (s.dim == 0) table = &hodge.point;
        else throw std::invalid_argument("no Hodge fixture entry for a sector of dimension " + std::to_string(s.dim));
        for (const auto& [pq, v] : *table) out[{pq.first + iota, pq.second + iota}] += v;
    }
    return out;
}

} // namespace chenruan
