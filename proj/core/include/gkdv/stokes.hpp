#pragma once

#include <vector>

#include "gkdv/symbol.hpp"

namespace gkdv {

enum class WaveSource { expansion, newton };

/// Small-amplitude 2*pi-periodic traveling wave, stored as a cosine series
/// u(x) = sum_n a_n cos(n x) with the normalization a_1 = epsilon.
struct StokesWave {
    double epsilon = 0.0;
    std::vector<double> cos_coeffs;  // a_0 .. a_N
    double speed = 0.0;              // c_epsilon
    double residual_norm = 0.0;      // l2 norm of the Galerkin residual
    WaveSource source = WaveSource::expansion;

    int modes() const { return static_cast<int>(cos_coeffs.size()) - 1; }
    double value(double x) const;
};

/// Second-order wave: a_1 = eps, a_0 = eps^2/2/(m(1)-m(0)),
/// a_2 = eps^2/2/(m(1)-m(2)), c = m(1) + eps^2*(1/(m(1)-m(0)) + 1/2/(m(1)-m(2))).
/// Throws ResonantDenominator when either denominator is below tolerance.
StokesWave second_order_expansion(const DispersionSymbol& sym, double epsilon);

/// Newton-Galerkin solve of c*u - M(D)u - u^2 = 0 projected on cosine modes
/// 0..n_modes, unknowns (a_0, a_2, .., a_N, c) with a_1 = eps fixed, starting
/// from the second-order expansion. The quadratic term is the full cosine
/// convolution, so residuals are exactly representable in the Galerkin space.
StokesWave solve_newton(const DispersionSymbol& sym, double epsilon, int n_modes,
                        double tol = 1.0e-12);

/// Cosine coefficients of the pointwise square of a cosine series
/// (full convolution; output has 2N+1 coefficients).
std::vector<double> cosine_square(const std::vector<double>& a);

/// Galerkin residual of the stationary equation for a candidate wave,
/// projected on modes 0..n_modes.
std::vector<double> stationary_residual(const DispersionSymbol& sym, const StokesWave& wave,
                                        int n_modes);

}  // namespace gkdv
