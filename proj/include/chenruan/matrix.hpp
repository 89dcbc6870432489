#pragma once

#include <vector>

#include "cyclotomic.hpp"
#include "rational.hpp"

namespace chenruan {

// Field hooks for the dense exact solvers. Zero/one are derived from a sample
// element so Cyclotomic matrices keep their field order.
template <typename T>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational inverse(const Rational& x) {
        if (x == 0) throw std::domain_error("inverse of zero");
        return Rational(1) / x;
    }
};

template <>
struct FieldOps<Cyclotomic> {
    static Cyclotomic zero_like(const Cyclotomic& s) { return Cyclotomic(s.order()); }
    static Cyclotomic one_like(const Cyclotomic& s) { return Cyclotomic(s.order(), Rational(1)); }
    static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
    static Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }
};

template <typename T>
using Matrix = std::vector<std::vector<T>>;

template <typename T>
Matrix<T> mat_identity(size_t n, const T& sample) {
    Matrix<T> out(n, std::vector<T>(n, FieldOps<T>::zero_like(sample)));
    for (size_t i = 0; i < n; ++i) out[i][i] = FieldOps<T>::one_like(sample);
    return out;
}

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    T z = FieldOps<T>::zero_like(a[0][0]);
    Matrix<T> out(n, std::vector<T>(m, z));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (FieldOps<T>::is_zero(a[i][t])) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][t] * b[t][j];
        }
    return out;
}

template <typename T>
Matrix<T> mat_pow(Matrix<T> a, unsigned e) {
    Matrix<T> out = mat_identity<T>(a.size(), a[0][0]);
    while (e) {
        if (e & 1) out = mat_mul(out, a);
        a = mat_mul(a, a);
        e >>= 1;
    }
    return out;
}

template <typename T>
Matrix<T> mat_transpose(const Matrix<T>& a) {
    Matrix<T> out(a[0].size(), std::vector<T>(a.size(), a[0][0]));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

// Reduced row echelon form in place; returns pivot columns.
template <typename T>
std::vector<size_t> mat_rref(Matrix<T>& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && FieldOps<T>::is_zero(a[pr][c])) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        T inv = FieldOps<T>::inverse(a[r][c]);
        for (size_t j = 0; j < cols; ++j) a[r][j] = inv * a[r][j];
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || FieldOps<T>::is_zero(a[i][c])) continue;
            T f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of the right kernel of a (not necessarily square) matrix.
template <typename T>
std::vector<std::vector<T>> mat_kernel(Matrix<T> a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    T z = FieldOps<T>::zero_like(a[0][0]);
    T one = FieldOps<T>::one_like(a[0][0]);
    std::vector<size_t> pivots = mat_rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(cols, z);
        v[c] = one;
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = z - a[pi][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
size_t mat_rank(Matrix<T> a) {
    return mat_rref(a).size();
}

template <typename T>
Matrix<T> mat_inverse(const Matrix<T>& a) {
    size_t n = a.size();
    T z = FieldOps<T>::zero_like(a[0][0]);
    Matrix<T> aug(n, std::vector<T>(2 * n, z));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = FieldOps<T>::one_like(a[0][0]);
    }
    auto pivots = mat_rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) throw std::domain_error("matrix not invertible");
    Matrix<T> out(n, std::vector<T>(n, z));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

// Exact determinant by elimination.
template <typename T>
T mat_det(Matrix<T> a) {
    size_t n = a.size();
    T det = FieldOps<T>::one_like(a[0][0]);
    for (size_t c = 0; c < n; ++c) {
        size_t pr = c;
        while (pr < n && FieldOps<T>::is_zero(a[pr][c])) ++pr;
        if (pr == n) return FieldOps<T>::zero_like(a[0][0]);
        if (pr != c) {
            std::swap(a[pr], a[c]);
            det = FieldOps<T>::zero_like(det) - det;
        }
        det = det * a[c][c];
        T inv = FieldOps<T>::inverse(a[c][c]);
        for (size_t i = c + 1; i < n; ++i) {
            if (FieldOps<T>::is_zero(a[i][c])) continue;
            T f = inv * a[i][c];
            for (size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
        }
    }
    return det;
}

// Exact kernel basis of (M - lambda*I) over the matrix entry field.
template <typename T>
std::vector<std::vector<T>> eigenspace(const Matrix<T>& m, const T& lambda) {
    if (m.empty() || m.size() != m[0].size()) throw std::invalid_argument("eigenspace needs a square matrix");
    Matrix<T> shifted = m;
    for (size_t i = 0; i < m.size(); ++i) shifted[i][i] = shifted[i][i] - lambda;
    return mat_kernel(std::move(shifted));
}

} // namespace chenruan
