#pragma once

#include <functional>

#include "fan.hpp"

namespace chenruan {

// Star of tau pushed to the quotient lattice N(tau) = N / (span(tau) cap N),
// coordinatized by a chosen basis {c_1, ..., c_r} of M(tau) = tau-perp cap M.
// Projected rays keep their lattice length (no primitivization): the local
// group orders of the induced orbifold charts live in those lengths.
struct QuotientFanData {
    ConeKey source;                 // tau, sorted ray indices
    IntMat m_basis;                 // rows: basis of M(tau) inside M = Z^d
    std::map<int, IntVec> rays;     // fan ray index -> coordinates in N(tau)
    std::vector<ConeKey> max_cones; // surviving ray index sets of star cones

    int dim() const { return static_cast<int>(m_basis.size()); }
};

inline QuotientFanData quotient_fan(const Fan& fan, const Cone& tau,
                                    const std::optional<IntMat>& basis_override = std::nullopt) {
    if (!fan.has_cone(tau.rays)) throw std::invalid_argument("cone is not in the fan");
    QuotientFanData q;
    q.source = tau.rays;
    q.m_basis = integer_kernel(tau.generators, fan.dim());
    if (basis_override) {
        // accept any basis of the same lattice: each row must pair to zero
        // with tau and be an integral combination of the computed basis
        if (basis_override->size() != q.m_basis.size())
            throw std::invalid_argument("basis override has wrong rank");
        for (const auto& row : *basis_override) {
            for (const auto& gen : tau.generators)
                if (idot(row, gen) != 0) throw std::invalid_argument("basis override does not annihilate the cone");
        }
        IntMat check = *basis_override;
        for (const auto& row : q.m_basis) check.push_back(row);
        // rank over Q must stay r and the index must be 1: test both inclusions
        auto contains = [&](const IntMat& basis, const IntVec& v) {
            std::vector<Rational> t;
            for (long x : v) t.push_back(Rational(x));
            auto sol = solve_in_span(basis, t);
            if (!sol) return false;
            for (const auto& c : *sol)
                if (!rat_is_integer(c)) return false;
            return true;
        };
        for (const auto& row : *basis_override)
            if (!contains(q.m_basis, row)) throw std::invalid_argument("basis override is not in M(tau)");
        for (const auto& row : q.m_basis)
            if (!contains(*basis_override, row)) throw std::invalid_argument("basis override spans a proper sublattice");
        q.m_basis = *basis_override;
    }
    for (const auto& mc : fan.star(tau.rays)) {
        ConeKey rest;
        for (int i : mc)
            if (!std::binary_search(tau.rays.begin(), tau.rays.end(), i)) rest.push_back(i);
        q.max_cones.push_back(rest);
        for (int i : rest) {
            if (q.rays.count(i)) continue;
            IntVec coords;
            for (const auto& m : q.m_basis) coords.push_back(idot(m, fan.rays()[i]));
            q.rays[i] = std::move(coords);
        }
    }
    std::sort(q.max_cones.begin(), q.max_cones.end());
    q.max_cones.erase(std::unique(q.max_cones.begin(), q.max_cones.end()), q.max_cones.end());
    return q;
}

// Duality check: the coordinate map N -> Z^r, n -> (<m_i, n>), must be onto,
// i.e. the chosen rows really form a basis of the saturated lattice M(tau).
// Onto <=> the gcd of the r x r minors of the r x d pairing matrix is 1.
inline bool quotient_pairing_is_identity(const QuotientFanData& q) {
    size_t r = q.m_basis.size();
    if (r == 0) return true;
    size_t d = q.m_basis[0].size();
    std::vector<size_t> pick(r);
    Integer g = 0;
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
        if (g == 1) return;
        if (pos == r) {
            IntMat minor(r, IntVec(r));
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) minor[i][j] = q.m_basis[i][pick[j]];
            Integer det = integer_det(minor);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            return;
        }
        for (size_t c = start; c + (r - pos) <= d; ++c) {
            pick[pos] = c;
            rec(pos + 1, c + 1);
        }
    };
    rec(0, 0);
    return g == 1;
}

} // namespace chenruan
