#pragma once

#include <array>

#include "period.hpp"
#include "sectors.hpp"

namespace chenruan {

// Action of the sector group generator on (tangent frame) (x) H^{0,1} of the
// covering curve: the Kronecker product of the conjugated period-coefficient
// block with the diagonal tangent action diag(zeta^w1, zeta^w2, zeta^w3).
struct ObstructionAction {
    int n = 1; // tangent twist: weights (n, 5-n, 0)
    int k = 1; // g2 = g1^k
    Matrix<Cyclotomic> matrix;
};

// Coefficient block of the conjugated H^{0,1} action for each cover type.
inline Matrix<Cyclotomic> h01_coefficient_block(int k, const PeriodMatrix& pm) {
    Cyclotomic pb = pm.p.conj(), qb = pm.q.conj(), sb = pm.s.conj();
    Cyclotomic one(5, Rational(1)), zero(5);
    Cyclotomic m1 = -one;
    switch (k) {
        case 1:
            return {{m1 - pb + qb, sb - qb}, {-qb, -sb}};
        case 2:
            return {{-qb, m1 - sb}, {one, zero}};
        case 3:
            return {{-pb, -qb}, {-qb, m1 - sb}};
        default:
            throw std::invalid_argument("no H^{0,1} block for k = " + std::to_string(k) +
                                        " (the k = 4 cover is rational; rank-zero path)");
    }
}

inline ObstructionAction build_obstruction_matrix(int n, int k, const PeriodMatrix& pm) {
    if (n < 1 || n > 4) throw std::invalid_argument("tangent twist n must be 1..4");
    Matrix<Cyclotomic> block = h01_coefficient_block(k, pm);
    Cyclotomic zero(5);
    std::vector<Cyclotomic> diag = {Cyclotomic::root_power(5, n), Cyclotomic::root_power(5, 5 - n),
                                    Cyclotomic(5, Rational(1))};
    Matrix<Cyclotomic> m(6, std::vector<Cyclotomic>(6, zero));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int i = 0; i < 3; ++i) m[3 * a + i][3 * b + i] = block[a][b] * diag[i];
    return {n, k, std::move(m)};
}

// Dimension of the fixed subspace, i.e. the eigenvalue-one eigenspace.
inline long invariant_rank(const ObstructionAction& action) {
    auto kernel = eigenspace(action.matrix, Cyclotomic(5, Rational(1)));
    return static_cast<long>(kernel.size());
}

// Local invariant of the reduced bundle at a singular point: the residual
// generator acts on the reduced fiber by the |K|-th power of its weight on
// the original fiber, so the exponent is (|K| * fiber_exponent) mod |K|.
inline Rational local_invariant_from_fiber_weight(long reduced_fiber_exponent, long order = 5) {
    long e = ((reduced_fiber_exponent % order) + order) % order;
    return Rational(e);
}

// Mirror-quintic curve sectors: the eigen-direction is a xi_1 or xi_2 line;
// the residual Z_5 at each singular point acts on the invariant fiber with
// some fifth-root weight, which the fiberwise fifth-power reduction kills.
inline std::vector<Rational> local_invariants_curve(int n, int k) {
    if (n < 1 || n > 4 || k < 1 || k > 3) throw std::invalid_argument("curve sector parameters out of range");
    std::vector<Rational> mu;
    for (int point = 0; point < 3; ++point) {
        // h scales the second chart coordinate by zeta and the first not at
        // all, so the invariant xi-line carries exponent 4 (n = 1, 2) or 0.
        long fiber_exponent_on_E = (n <= 2) ? 4 : 0;
        long reduced = (5 * fiber_exponent_on_E) % 5;
        mu.push_back(local_invariant_from_fiber_weight(reduced));
    }
    return mu;
}

// <c1(E_(g)), [X_(g)]> assembled from the two fiberwise reductions and the
// desingularization bookkeeping: (1/25) * (c1_desing + sum mu_j / 5).
inline Rational curve_euler_integral(const TricyclicSector& sector, const std::vector<Rational>& mu,
                                     long c1_desing) {
    if (sector.dim != 1) throw std::invalid_argument("Euler integral chain applies to curve sectors");
    Rational acc(c1_desing);
    for (const auto& m : mu) {
        if (m < 0 || m >= 5) throw std::invalid_argument("local invariant outside [0,5)");
        acc += m / Rational(5);
    }
    return acc / Rational(25);
}

// Three-point function value for one sector and one degree pattern.
struct ThreePointValue {
    Rational value;
    std::string reason; // "ok" or the zero reason code
};

struct CohomologyDegree {
    int p = 0, q = 0;
};

// Dispatch on sector geometry: point sectors with shift sum 3 integrate the
// constant classes against the rank-zero Euler class with the 1/|local group|
// normalization; curve sectors with rank one produce the Euler number 1/25;
// the rational-cover curve case pairs two constants with one (1,1)-form to
// 1/5. Degree-incompatible queries return zero with a reason code, not an
// error, so ring assembly can iterate freely.
inline ThreePointValue three_point(const TricyclicSector& sector, const std::array<CohomologyDegree, 3>& degrees,
                                   const Rational& euler_curve = Rational(1, 25)) {
    auto all_zero_forms = [&] {
        for (const auto& d : degrees)
            if (d.p != 0 || d.q != 0) return false;
        return true;
    };
    if (sector.dim == 0) {
        if (!all_zero_forms()) return {Rational(0), "degree"};
        if (sector.rank != 0) return {Rational(0), "obstruction-rank"};
        return {Rational(1, 25), "ok"};
    }
    if (sector.dim == 1) {
        if (sector.rank == 1) {
            if (!all_zero_forms()) return {Rational(0), "degree"};
            return {euler_curve, "ok"};
        }
        // rank zero: the integrand needs exactly one (1,1)-form
        int ones = 0, zeros = 0;
        for (const auto& d : degrees) {
            if (d.p == 0 && d.q == 0) ++zeros;
            else if (d.p == 1 && d.q == 1) ++ones;
        }
        if (ones == 1 && zeros == 2) return {Rational(1, 5), "ok"};
        return {Rational(0), "degree"};
    }
    return {Rational(0), "identity-sector-unhandled"};
}

} // namespace chenruan
