#include "gkdv/stokes.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>

#include "gkdv/errors.hpp"

namespace gkdv {

namespace {

constexpr double kDenominatorTol = 1.0e-9;
constexpr int kMaxNewtonIterations = 50;

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Cosine coefficients of u*v for two cosine series (full convolution).
std::vector<double> cosine_product(const std::vector<double>& a, const std::vector<double>& b) {
    const int na = static_cast<int>(a.size()) - 1;
    const int nb = static_cast<int>(b.size()) - 1;
    std::vector<double> c(static_cast<std::size_t>(na + nb) + 1, 0.0);
    for (int m = 0; m <= na; ++m) {
        if (a[m] == 0.0) continue;
        for (int n = 0; n <= nb; ++n) {
            if (b[n] == 0.0) continue;
            const double p = a[m] * b[n];
            if (m == 0 && n == 0) {
                c[0] += p;
            } else if (m == 0) {
                c[n] += p;
            } else if (n == 0) {
                c[m] += p;
            } else {
                c[m + n] += 0.5 * p;
                c[std::abs(m - n)] += 0.5 * p;
            }
        }
    }
    return c;
}

}  // namespace

double StokesWave::value(double x) const {
    double u = 0.0;
    for (std::size_t n = 0; n < cos_coeffs.size(); ++n)
        u += cos_coeffs[n] * std::cos(static_cast<double>(n) * x);
    return u;
}

std::vector<double> cosine_square(const std::vector<double>& a) { return cosine_product(a, a); }

std::vector<double> stationary_residual(const DispersionSymbol& sym, const StokesWave& wave,
                                        int n_modes) {
    std::vector<double> b = cosine_square(wave.cos_coeffs);
    std::vector<double> r(static_cast<std::size_t>(n_modes) + 1, 0.0);
    for (int n = 0; n <= n_modes; ++n) {
        const double an =
            n < static_cast<int>(wave.cos_coeffs.size()) ? wave.cos_coeffs[n] : 0.0;
        const double bn = n < static_cast<int>(b.size()) ? b[n] : 0.0;
        r[n] = (wave.speed - sym(static_cast<double>(n))) * an - bn;
    }
    return r;
}

StokesWave second_order_expansion(const DispersionSymbol& sym, double epsilon) {
    if (std::abs(epsilon) > 0.1)
        std::fprintf(stderr,
                     "stokes: |epsilon| = %g is outside the small-amplitude regime; "
                     "the expansion error grows like epsilon^3\n",
                     std::abs(epsilon));
    const double m0 = sym(0.0), m1 = sym(1.0), m2 = sym(2.0);
    const double d0 = m1 - m0, d2 = m1 - m2;
    if (std::abs(d0) < kDenominatorTol)
        throw ResonantDenominator("m(1) - m(0) vanishes (resonance n = 0)");
    if (std::abs(d2) < kDenominatorTol)
        throw ResonantDenominator("m(1) - m(2) vanishes (resonance n = 2)");

    StokesWave wave;
    wave.epsilon = epsilon;
    wave.source = WaveSource::expansion;
    const double e2 = epsilon * epsilon;
    wave.cos_coeffs = {0.5 * e2 / d0, epsilon, 0.5 * e2 / d2};
    wave.speed = m1 + e2 * (1.0 / d0 + 0.5 / d2);
    wave.residual_norm = l2_norm(stationary_residual(sym, wave, wave.modes() + 2));
    return wave;
}

StokesWave solve_newton(const DispersionSymbol& sym, double epsilon, int n_modes, double tol) {
    if (n_modes < 8) throw InvalidParameter("solve_newton: n_modes must be >= 8");

    StokesWave wave = second_order_expansion(sym, epsilon);
    wave.cos_coeffs.resize(static_cast<std::size_t>(n_modes) + 1, 0.0);
    wave.source = WaveSource::newton;

    const int n_unknowns = n_modes + 1;  // a_0, a_2..a_N and c
    // Unknown layout: x = (a_0, a_2, a_3 .. a_N, c).
    auto coeff_index = [](int n) { return n == 0 ? 0 : n - 1; };

    std::vector<double> symbol_at(static_cast<std::size_t>(n_modes) + 1);
    for (int n = 0; n <= n_modes; ++n) symbol_at[n] = sym(static_cast<double>(n));

    Eigen::VectorXd residual(n_modes + 1);
    Eigen::MatrixXd jacobian(n_modes + 1, n_unknowns);
    std::vector<double> unit(static_cast<std::size_t>(n_modes) + 1, 0.0);

    for (int iter = 0; iter <= kMaxNewtonIterations; ++iter) {
        std::vector<double> r = stationary_residual(sym, wave, n_modes);
        for (int n = 0; n <= n_modes; ++n) residual(n) = r[n];
        wave.residual_norm = residual.norm();
        if (wave.residual_norm <= tol) break;
        if (iter == kMaxNewtonIterations)
            throw NewtonDiverged("Newton iteration cap reached at residual " +
                                 std::to_string(wave.residual_norm));

        // d residual_n / d a_j = (c - m(n)) delta_nj - 2 (u * cos(jx))_n
        for (int j = 0; j <= n_modes; ++j) {
            if (j == 1) continue;  // a_1 fixed by the amplitude normalization
            unit.assign(unit.size(), 0.0);
            unit[j] = 1.0;
            std::vector<double> col = cosine_product(wave.cos_coeffs, unit);
            const int jc = coeff_index(j);
            for (int n = 0; n <= n_modes; ++n) {
                const double diag = (n == j) ? wave.speed - symbol_at[n] : 0.0;
                jacobian(n, jc) = diag - 2.0 * col[n];
            }
        }
        // d residual_n / d c = a_n
        for (int n = 0; n <= n_modes; ++n) jacobian(n, n_unknowns - 1) = wave.cos_coeffs[n];

        Eigen::VectorXd step = jacobian.partialPivLu().solve(-residual);
        if (!step.allFinite()) throw NewtonDiverged("singular Jacobian in Newton step");
        for (int n = 0; n <= n_modes; ++n) {
            if (n == 1) continue;
            wave.cos_coeffs[n] += step(coeff_index(n));
        }
        wave.speed += step(n_unknowns - 1);
    }

    double total = 0.0;
    for (double a : wave.cos_coeffs) total += a * a;
    const double tail = wave.cos_coeffs.back() * wave.cos_coeffs.back();
    if (total > 0.0 && tail > 1.0e-3 * total)
        throw TruncationTooSmall("tail coefficient a_N carries more than 1e-3 of the energy");
    return wave;
}

}  // namespace gkdv
