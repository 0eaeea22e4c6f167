#pragma once

#include <array>
#include <complex>
#include <vector>

#include "gkdv/modulation.hpp"

namespace gkdv {

/// Leading-order eigenvalue branches near the origin, sampled on a grid of
/// Floquet exponents mu >= 0.
struct BenjaminFeirBranch {
    std::vector<double> mu_grid;
    std::vector<std::complex<double>> lambda0;
    std::vector<std::complex<double>> lambda1_plus;
    std::vector<std::complex<double>> lambda1_minus;
    double mu_crit = 0.0;  // 0 for the stable case
    double epsilon = 0.0;
};

/// Benjamin-Feir discriminant at leading order: te_wb*eps^2 - te_b^2*mu^2.
double delta_bf(const ModulationCoefficients& coeffs, double mu, double epsilon);

/// Critical Floquet exponent eps*sqrt(te_wb)/|te_b| (leading order).
/// Throws NotUnstable when te_wb <= 0.
double mu_critical(const ModulationCoefficients& coeffs, double epsilon);

/// lambda_0 = i*te33*mu and lambda_1^{+-} = -i*mu*te12 +- mu*sqrt(Delta_BF)
/// (+- i*mu*sqrt(|Delta_BF|) past the critical exponent).
BenjaminFeirBranch eigenvalue_branches(const ModulationCoefficients& coeffs, double epsilon,
                                       std::vector<double> mu_grid);

/// Closed planar polyline through the origin tracing the figure-"8":
/// (+-mu*sqrt(te_wb*eps^2 - te_b^2*mu^2), -te12*mu) for mu in [0, mu_crit]
/// together with its reflection across the real axis.
struct Figure8Curve {
    std::vector<std::array<double, 2>> points;  // (Re, Im), closed
    double mu_crit = 0.0;
    double max_re = 0.0;
    double max_im = 0.0;
};
Figure8Curve figure8_curve(const ModulationCoefficients& coeffs, double epsilon, int n_samples);

/// Closed-form maximizer of the real part over the unstable band:
/// rate = te_wb*eps^2/(2|te_b|) at mu = eps*sqrt(te_wb)/(sqrt(2)*|te_b|).
struct GrowthRate {
    double rate = 0.0;
    double mu_star = 0.0;
};
GrowthRate max_growth_rate(const ModulationCoefficients& coeffs, double epsilon);

}  // namespace gkdv
