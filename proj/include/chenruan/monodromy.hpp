#pragma once

#include <functional>

#include "matrix.hpp"
#include "unipoly.hpp"

namespace chenruan {

// Orbifold Riemann sphere with three marked points and the order of the
// covering group K.
struct OrbifoldSphere {
    long k1 = 1, k2 = 1, k3 = 1;
    long group_order = 1;
};

// Genus of the K-cover from the Euler characteristic of a branched cover.
inline long cover_genus(const OrbifoldSphere& s) {
    if (s.k1 < 1 || s.k2 < 1 || s.k3 < 1 || s.group_order < 1)
        throw std::invalid_argument("marked orders and group order must be positive");
    for (long k : {s.k1, s.k2, s.k3})
        if (s.group_order % k != 0)
            throw std::invalid_argument("marked order " + std::to_string(k) + " does not divide the group order");
    long num = 2 + s.group_order - (s.group_order / s.k1 + s.group_order / s.k2 + s.group_order / s.k3);
    if (num % 2 != 0 || num < 0) throw std::invalid_argument("inconsistent branching data: genus not a nonnegative integer");
    return num / 2;
}

// Integer matrices of the rotation action on H^1 of the genus-two cover, in
// the canonical symplectic basis order (a1, b1, a2, b2). Keyed by the power k
// with g2 = g1^k. The k = 1 fixture also records the H_1 matrix (the
// transpose) for the duality test.
inline Matrix<Rational> monodromy_h1_action(int k) {
    static const int fix1[4][4] = {{-1, -1, 0, 1}, {1, 0, 0, -1}, {0, 0, 0, -1}, {0, -1, 1, 0}};
    static const int fix2[4][4] = {{0, 0, -1, -1}, {1, 0, 0, -1}, {1, 0, 0, 0}, {-1, 1, -1, -1}};
    static const int fix3[4][4] = {{0, -1, 0, 0}, {1, 0, -1, -1}, {0, 0, -1, -1}, {0, -1, 1, 0}};
    const int(*src)[4] = nullptr;
    switch (k) {
        case 1: src = fix1; break;
        case 2: src = fix2; break;
        case 3: src = fix3; break;
        default: throw std::invalid_argument("monodromy fixture exists for k = 1, 2, 3 only");
    }
    Matrix<Rational> m(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Rational(src[i][j]);
    return m;
}

// Homology-action fixture for k = 1; equals the transpose of the H^1 matrix.
inline Matrix<Rational> monodromy_homology_action_k1() {
    static const int fix[4][4] = {{-1, 1, 0, 0}, {-1, 0, 0, -1}, {0, 0, 0, 1}, {1, -1, -1, 0}};
    Matrix<Rational> m(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Rational(fix[i][j]);
    return m;
}

inline Matrix<Rational> standard_symplectic_form() {
    Matrix<Rational> j(4, std::vector<Rational>(4, Rational(0)));
    j[0][1] = 1;
    j[1][0] = -1;
    j[2][3] = 1;
    j[3][2] = -1;
    return j;
}

inline bool is_symplectic(const Matrix<Rational>& m) {
    auto j = standard_symplectic_form();
    return mat_mul(mat_mul(mat_transpose(m), j), m) == j;
}

inline bool has_order(const Matrix<Rational>& m, unsigned n) {
    return mat_pow(m, n) == mat_identity<Rational>(m.size(), Rational(0));
}

// Characteristic polynomial of a small rational matrix by Laplace expansion
// of det(xI - M) with univariate entries.
inline UniPoly char_poly(const Matrix<Rational>& m) {
    size_t n = m.size();
    std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            a[i][j] = UniPoly::constant(-m[i][j]);
            if (i == j) a[i][j] = a[i][j] + UniPoly::monomial(1);
        }
    std::function<UniPoly(std::vector<size_t>, size_t)> det = [&](std::vector<size_t> cols, size_t row) -> UniPoly {
        if (cols.size() == 1) return a[row][cols[0]];
        UniPoly acc;
        for (size_t k = 0; k < cols.size(); ++k) {
            std::vector<size_t> rest;
            for (size_t t = 0; t < cols.size(); ++t)
                if (t != k) rest.push_back(cols[t]);
            UniPoly sub = a[row][cols[k]] * det(rest, row + 1);
            acc = (k % 2 == 0) ? acc + sub : acc - sub;
        }
        return acc;
    };
    std::vector<size_t> cols(n);
    for (size_t i = 0; i < n; ++i) cols[i] = i;
    return det(cols, 0);
}

} // namespace chenruan
