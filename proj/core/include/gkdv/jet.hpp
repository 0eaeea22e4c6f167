#pragma once

#include <cmath>

#include "gkdv/errors.hpp"

namespace gkdv {

/// Second-order Taylor jet: a value together with its first two derivatives
/// with respect to the single independent variable.
///
/// The arithmetic below propagates (v, d1, d2) exactly through all the
/// operations a dispersion symbol is built from, so evaluating an expression
/// on Jet2 yields closed-form derivatives rather than finite differences.
struct Jet2 {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    constexpr bool finite() const {
        return std::isfinite(v) && std::isfinite(d1) && std::isfinite(d2);
    }
};

/// The constant c: derivatives vanish.
constexpr Jet2 jet_const(double c) { return {c, 0.0, 0.0}; }

/// The independent variable seeded at x.
constexpr Jet2 jet_var(double x) { return {x, 1.0, 0.0}; }

constexpr Jet2 operator+(Jet2 a, Jet2 b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
constexpr Jet2 operator-(Jet2 a, Jet2 b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
constexpr Jet2 operator-(Jet2 a) { return {-a.v, -a.d1, -a.d2}; }

constexpr Jet2 operator*(Jet2 a, Jet2 b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

constexpr Jet2 operator+(Jet2 a, double c) { return {a.v + c, a.d1, a.d2}; }
constexpr Jet2 operator+(double c, Jet2 a) { return a + c; }
constexpr Jet2 operator-(Jet2 a, double c) { return {a.v - c, a.d1, a.d2}; }
constexpr Jet2 operator-(double c, Jet2 a) { return {c - a.v, -a.d1, -a.d2}; }
constexpr Jet2 operator*(Jet2 a, double c) { return {a.v * c, a.d1 * c, a.d2 * c}; }
constexpr Jet2 operator*(double c, Jet2 a) { return a * c; }

inline Jet2 operator/(Jet2 a, Jet2 b) {
    if (b.v == 0.0) throw DomainError("division by zero in jet arithmetic");
    const double h = a.v / b.v;
    const double h1 = (a.d1 - h * b.d1) / b.v;
    const double h2 = (a.d2 - 2.0 * h1 * b.d1 - h * b.d2) / b.v;
    return {h, h1, h2};
}
inline Jet2 operator/(Jet2 a, double c) { return a / jet_const(c); }
inline Jet2 operator/(double c, Jet2 a) { return jet_const(c) / a; }

inline Jet2 sqrt(Jet2 a) {
    if (a.v < 0.0) throw DomainError("sqrt of negative value in jet arithmetic");
    if (a.v == 0.0) throw DomainError("sqrt jet singular at zero");
    const double s = std::sqrt(a.v);
    const double s1 = a.d1 / (2.0 * s);
    const double s2 = (a.d2 - 2.0 * s1 * s1) / (2.0 * s);
    return {s, s1, s2};
}

inline Jet2 exp(Jet2 a) {
    const double e = std::exp(a.v);
    return {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}

inline Jet2 tanh(Jet2 a) {
    const double t = std::tanh(a.v);
    const double s = 1.0 - t * t;  // sech^2
    return {t, s * a.d1, s * a.d2 - 2.0 * t * s * a.d1 * a.d1};
}

inline Jet2 cosh(Jet2 a) {
    const double c = std::cosh(a.v), s = std::sinh(a.v);
    return {c, s * a.d1, s * a.d2 + c * a.d1 * a.d1};
}

inline Jet2 sinh(Jet2 a) {
    const double c = std::cosh(a.v), s = std::sinh(a.v);
    return {s, c * a.d1, c * a.d2 + s * a.d1 * a.d1};
}

/// coth(u) = 1/tanh(u); coth' = 1 - coth^2. Singular at u = 0.
inline Jet2 coth(Jet2 a) {
    const double t = std::tanh(a.v);
    if (t == 0.0) throw DomainError("coth singular at zero argument");
    const double c = 1.0 / t;
    const double s = 1.0 - c * c;
    return {c, s * a.d1, s * a.d2 - 2.0 * c * s * a.d1 * a.d1};
}

/// Real power. For non-integer exponents the base must be positive.
inline Jet2 pow(Jet2 a, double p) {
    if (p == 0.0) return jet_const(1.0);
    if (p == 1.0) return a;
    const bool integral = p == std::floor(p);
    if (!integral && a.v < 0.0) throw DomainError("negative base with non-integer exponent");
    if (a.v == 0.0) {
        if (p < 0.0) throw DomainError("zero base with negative exponent");
        if (p < 2.0) throw DomainError("pow jet unbounded at zero base for exponent < 2");
        return {0.0, 0.0, p == 2.0 ? 2.0 * a.d1 * a.d1 : 0.0};
    }
    const double f = std::pow(a.v, p);
    const double g = p * std::pow(a.v, p - 1.0);
    const double h = p * (p - 1.0) * std::pow(a.v, p - 2.0);
    return {f, g * a.d1, h * a.d1 * a.d1 + g * a.d2};
}

/// |u| away from u = 0; at a zero of u the right-limit jet follows the sign
/// of the first non-vanishing derivative (for the plain variable: (0, 1, 0)).
inline Jet2 abs(Jet2 a) {
    if (a.v > 0.0) return a;
    if (a.v < 0.0) return -a;
    if (a.d1 > 0.0) return a;
    if (a.d1 < 0.0) return -a;
    return {0.0, 0.0, std::abs(a.d2)};
}

}  // namespace gkdv
