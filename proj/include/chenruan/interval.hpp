#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "cyclotomic.hpp"

namespace chenruan {

inline constexpr double kNumericTolerance = 1e-9;

// Complex value with a conservative error radius. Used for sign decisions on
// embedded algebraic numbers; sign queries refuse to answer when the radius
// straddles zero instead of guessing.
struct ComplexInterval {
    std::complex<double> center{0.0, 0.0};
    double radius = 0.0;

    static ComplexInterval exact(std::complex<double> z) { return {z, 0.0}; }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.center + b.center, a.radius + b.radius + 1e-16 * std::abs(a.center + b.center)};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        double mag = std::abs(a.center) * b.radius + std::abs(b.center) * a.radius + a.radius * b.radius;
        return {a.center * b.center, mag + 1e-16 * std::abs(a.center * b.center)};
    }

    bool sign_re_positive() const {
        if (std::fabs(center.real()) <= radius)
            throw std::runtime_error("interval too wide for a sign decision");
        return center.real() > 0.0;
    }
};

// Interval embedding of a cyclotomic number: per-term rounding bounded by a
// few ulps, scaled by the coefficient magnitudes.
inline ComplexInterval embed_interval(const Cyclotomic& a) {
    ComplexInterval out;
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        double angle = 2.0 * M_PI * static_cast<double>(i) / a.order();
        double c = rat_double(a.coeffs()[i]);
        std::complex<double> term = c * std::complex<double>(std::cos(angle), std::sin(angle));
        out.center += term;
        out.radius += 4e-16 * (std::fabs(c) + std::abs(term));
    }
    out.radius += 1e-16 * std::abs(out.center);
    return out;
}

} // namespace chenruan
