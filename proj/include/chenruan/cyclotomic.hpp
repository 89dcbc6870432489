#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace chenruan {

namespace detail {
inline int euler_phi(int n) {
    int out = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out -= out / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) out -= out / n;
    return out;
}

inline const UniPoly& cached_cyclotomic(int n) {
    static std::map<int, UniPoly> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, cyclotomic_polynomial(n)).first;
    return it->second;
}
} // namespace detail

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1), reduced
// modulo the n-th cyclotomic polynomial. The representative is unique, so
// operator== is exact equality in the field.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(int order, const Rational& constant = Rational(0))
        : order_(check_order(order)), coeffs_(detail::euler_phi(order), Rational(0)) {
        coeffs_[0] = constant;
    }
    Cyclotomic(int order, std::vector<Rational> coeffs) : order_(check_order(order)), coeffs_(std::move(coeffs)) {
        size_t phi = detail::euler_phi(order_);
        if (coeffs_.size() > phi) throw std::invalid_argument("coefficient vector longer than phi(n)");
        coeffs_.resize(phi, Rational(0));
    }

    // zeta_n^k
    static Cyclotomic root_power(int order, long k) {
        Cyclotomic out(order);
        k %= order;
        if (k < 0) k += order;
        UniPoly p = UniPoly::monomial(static_cast<int>(k));
        out.assign_reduced(p);
        return out;
    }
    static Cyclotomic from_rational(int order, const Rational& r) { return Cyclotomic(order, r); }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    const Rational& rational_part() const { return coeffs_[0]; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic out = a;
        for (size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        return out;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic out = a;
        for (size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
        return out;
    }
    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic out = a;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        UniPoly pa{std::vector<Rational>(a.coeffs_)};
        UniPoly pb{std::vector<Rational>(b.coeffs_)};
        Cyclotomic out(a.order_);
        out.assign_reduced(pa * pb);
        return out;
    }
    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
        Cyclotomic out = a;
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
        const UniPoly& modulus = detail::cached_cyclotomic(order_);
        auto [g, u, v] = unipoly_xgcd(UniPoly{std::vector<Rational>(coeffs_)}, modulus);
        if (g.degree() != 0) throw std::logic_error("cyclotomic modulus not coprime to element");
        Cyclotomic out(order_);
        out.assign_reduced((Rational(1) / g.at(0)) * u);
        return out;
    }

    // Galois twist z -> z^k for gcd(k, n) = 1; k = n-1 is complex conjugation.
    Cyclotomic galois(long k) const {
        long kk = ((k % order_) + order_) % order_;
        if (std::gcd(kk, static_cast<long>(order_)) != 1)
            throw std::invalid_argument("galois exponent not coprime to order");
        UniPoly substituted;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            substituted = substituted + UniPoly::monomial(static_cast<int>((i * kk) % order_), coeffs_[i]);
        }
        Cyclotomic out(order_);
        out.assign_reduced(substituted);
        return out;
    }
    Cyclotomic conj() const { return order_ == 1 ? *this : galois(order_ - 1); }

    // Embed into Q(zeta_m) for n | m, sending zeta_n to zeta_m^(m/n).
    Cyclotomic promote(int m) const {
        if (m % order_ != 0) throw std::invalid_argument("promotion target must be a multiple of the order");
        if (m == order_) return *this;
        int step = m / order_;
        UniPoly p;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            p = p + UniPoly::monomial(static_cast<int>(i) * step, coeffs_[i]);
        }
        Cyclotomic out(m);
        out.assign_reduced(p);
        return out;
    }

    // Numeric embedding at zeta_n = exp(2*pi*i/n).
    std::complex<double> embed() const {
        std::complex<double> acc(0.0, 0.0);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            double angle = 2.0 * M_PI * static_cast<double>(i) / order_;
            acc += rat_double(coeffs_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return acc;
    }

private:
    static int check_order(int order) {
        if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
        return order;
    }
    static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ != b.order_)
            throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a.order_) + " vs " +
                                        std::to_string(b.order_));
    }
    void assign_reduced(const UniPoly& p) {
        auto [q, r] = unipoly_divmod(p, detail::cached_cyclotomic(order_));
        (void)q;
        std::fill(coeffs_.begin(), coeffs_.end(), Rational(0));
        for (int i = 0; i <= r.degree(); ++i) coeffs_[i] = r.at(i);
    }

    int order_;
    std::vector<Rational> coeffs_;
};

inline Cyclotomic cyclotomic_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }

} // namespace chenruan
