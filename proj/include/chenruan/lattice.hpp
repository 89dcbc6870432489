#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace chenruan {

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;

inline long ivec_gcd(const IntVec& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

inline long idot(const IntVec& a, const IntVec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Basis of { x in Z^d : rows * x = 0 } via unimodular column operations.
// The returned vectors form a lattice basis of the full (saturated) kernel.
inline IntMat integer_kernel(const IntMat& rows, size_t d) {
    IntMat a(rows.begin(), rows.end());
    IntMat u(d, IntVec(d, 0));
    for (size_t i = 0; i < d; ++i) u[i][i] = 1;
    size_t col = 0;
    for (size_t r = 0; r < a.size() && col < d; ++r) {
        while (true) {
            std::vector<size_t> nz;
            for (size_t c = col; c < d; ++c)
                if (a[r][c] != 0) nz.push_back(c);
            if (nz.empty()) break;
            if (nz.size() == 1) {
                size_t c = nz[0];
                if (c != col) {
                    for (auto& row : a) std::swap(row[c], row[col]);
                    for (auto& row : u) std::swap(row[c], row[col]);
                }
                ++col;
                break;
            }
            std::sort(nz.begin(), nz.end(), [&](size_t x, size_t y) {
                return std::labs(a[r][x]) < std::labs(a[r][y]);
            });
            size_t c0 = nz[0], c1 = nz[1];
            long q = a[r][c1] / a[r][c0];
            for (auto& row : a) row[c1] -= q * row[c0];
            for (auto& row : u) row[c1] -= q * row[c0];
        }
    }
    IntMat kernel;
    for (size_t c = col; c < d; ++c) {
        IntVec v(d);
        for (size_t i = 0; i < d; ++i) v[i] = u[i][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Integer determinant (Bareiss), |result| = lattice index of the row span.
inline Integer integer_det(const IntMat& m) {
    size_t n = m.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Solves rows^T * x = target over Q when target lies in the row span;
// nullopt otherwise. rows are k vectors of length d, x has length k.
inline std::optional<std::vector<Rational>> solve_in_span(const IntMat& rows, const std::vector<Rational>& target) {
    size_t k = rows.size(), d = rows.empty() ? target.size() : rows[0].size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(k + 1, Rational(0)));
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < k; ++i) a[j][i] = Rational(rows[i][j]);
        a[j][k] = target[j];
    }
    size_t r = 0;
    std::vector<size_t> piv;
    for (size_t c = 0; c < k && r < d; ++c) {
        size_t pr = r;
        while (pr < d && a[pr][c] == 0) ++pr;
        if (pr == d) continue;
        std::swap(a[r], a[pr]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (size_t i = 0; i < d; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = 0; j <= k; ++j) a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    for (size_t i = r; i < d; ++i)
        if (a[i][k] != 0) return std::nullopt;
    std::vector<Rational> x(k, Rational(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a[i][k];
    // inconsistent overdetermined systems with pivot gaps
    for (size_t j = 0; j < d; ++j) {
        Rational s(0);
        for (size_t i = 0; i < k; ++i) s += x[i] * Rational(rows[i][j]);
        if (s != target[j]) return std::nullopt;
    }
    return x;
}

} // namespace chenruan
