#include "gkdv/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "gkdv/errors.hpp"

namespace gkdv {

double delta_bf(const ModulationCoefficients& coeffs, double mu, double epsilon) {
    return coeffs.te_wb * epsilon * epsilon - coeffs.te_b * coeffs.te_b * mu * mu;
}

double mu_critical(const ModulationCoefficients& coeffs, double epsilon) {
    if (coeffs.te_wb <= 0.0)
        throw NotUnstable("mu_critical requires te_wb > 0, got te_wb = " +
                          std::to_string(coeffs.te_wb));
    return epsilon * std::sqrt(coeffs.te_wb) / std::abs(coeffs.te_b);
}

BenjaminFeirBranch eigenvalue_branches(const ModulationCoefficients& coeffs, double epsilon,
                                       std::vector<double> mu_grid) {
    for (std::size_t i = 0; i < mu_grid.size(); ++i) {
        if (mu_grid[i] < 0.0) throw InvalidParameter("mu grid must be nonnegative");
        if (i > 0 && mu_grid[i] < mu_grid[i - 1])
            throw InvalidParameter("mu grid must be ascending");
    }
    BenjaminFeirBranch branch;
    branch.epsilon = epsilon;
    branch.mu_crit = coeffs.te_wb > 0.0 ? mu_critical(coeffs, epsilon) : 0.0;
    branch.mu_grid = std::move(mu_grid);
    branch.lambda0.reserve(branch.mu_grid.size());
    branch.lambda1_plus.reserve(branch.mu_grid.size());
    branch.lambda1_minus.reserve(branch.mu_grid.size());
    for (double mu : branch.mu_grid) {
        branch.lambda0.emplace_back(0.0, coeffs.te33 * mu);
        const double delta = delta_bf(coeffs, mu, epsilon);
        const std::complex<double> drift(0.0, -coeffs.te12 * mu);
        if (delta >= 0.0) {
            const double re = mu * std::sqrt(delta);
            branch.lambda1_plus.push_back(drift + re);
            branch.lambda1_minus.push_back(drift - re);
        } else {
            const std::complex<double> im(0.0, mu * std::sqrt(-delta));
            branch.lambda1_plus.push_back(drift + im);
            branch.lambda1_minus.push_back(drift - im);
        }
    }
    return branch;
}

Figure8Curve figure8_curve(const ModulationCoefficients& coeffs, double epsilon, int n_samples) {
    if (coeffs.te_wb <= 0.0)
        throw NotUnstable("figure8_curve requires te_wb > 0");
    if (n_samples < 16) throw InvalidParameter("figure8_curve: n_samples must be >= 16");

    Figure8Curve curve;
    curve.mu_crit = mu_critical(coeffs, epsilon);
    const double a = coeffs.te_wb * epsilon * epsilon;
    const double b = coeffs.te_b * coeffs.te_b;

    auto point = [&](double mu, double sign_re, double sign_im) -> std::array<double, 2> {
        const double rad = std::max(a - b * mu * mu, 0.0);
        const double re = sign_re * mu * std::sqrt(rad);
        const double im = sign_im * (-coeffs.te12 * mu);
        curve.max_re = std::max(curve.max_re, std::abs(re));
        curve.max_im = std::max(curve.max_im, std::abs(im));
        return {re, im};
    };

    // One closed tour through the origin: up the right side of the first
    // lobe, down its left side, then the reflected lobe.
    for (int i = 0; i <= n_samples; ++i)
        curve.points.push_back(point(curve.mu_crit * i / n_samples, +1.0, +1.0));
    for (int i = n_samples - 1; i >= 0; --i)
        curve.points.push_back(point(curve.mu_crit * i / n_samples, -1.0, +1.0));
    for (int i = 1; i <= n_samples; ++i)
        curve.points.push_back(point(curve.mu_crit * i / n_samples, +1.0, -1.0));
    for (int i = n_samples - 1; i >= 0; --i)
        curve.points.push_back(point(curve.mu_crit * i / n_samples, -1.0, -1.0));
    return curve;
}

GrowthRate max_growth_rate(const ModulationCoefficients& coeffs, double epsilon) {
    if (coeffs.te_wb <= 0.0)
        throw NotUnstable("max_growth_rate requires te_wb > 0");
    GrowthRate g;
    const double abs_b = std::abs(coeffs.te_b);
    g.rate = coeffs.te_wb * epsilon * epsilon / (2.0 * abs_b);
    g.mu_star = epsilon * std::sqrt(coeffs.te_wb) / (std::sqrt(2.0) * abs_b);
    return g;
}

}  // namespace gkdv
