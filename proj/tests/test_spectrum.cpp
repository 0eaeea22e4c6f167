#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gkdv/errors.hpp"
#include "gkdv/spectrum.hpp"
#include "gkdv/symbol.hpp"

using namespace gkdv;

namespace {

ModulationCoefficients coeffs_of(double te_w, double te_b, double te12, double te33) {
    // Synthetic coefficient sets let the branch formulas be exercised directly.
    ModulationCoefficients c;
    c.te_w = te_w;
    c.te_b = te_b;
    c.te_wb = te_w * te_b;
    c.te12 = te12;
    c.te33 = te33;
    c.te22 = c.te_b + c.te12;
    c.te_d = c.te12 + c.te33;
    return c;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

const ModulationCoefficients whitham2 =
    compute_coefficients(DispersionSymbol::catalog(SymbolKind::whitham, {{"tth", 2.0}}));

}  // namespace

TEST_CASE("discriminant arithmetic") {
    ModulationCoefficients c = coeffs_of(1.0, -3.0, 0.0, 1.0);
    CHECK(c.te_wb == doctest::Approx(-3.0));
    CHECK(delta_bf(c, 0.0, 0.1) == doctest::Approx(c.te_wb * 0.01).epsilon(1e-15));

    // te_wb = 1, te_b = -3: at eps = 0.1, mu = 0.01 the value is 0.01 - 0.0009.
    c.te_wb = 1.0;
    CHECK(delta_bf(c, 0.01, 0.1) == doctest::Approx(0.0091).epsilon(1e-15));

    // The discriminant vanishes at the critical exponent by definition.
    const double mu_c = mu_critical(c, 0.1);
    CHECK(std::abs(delta_bf(c, mu_c, 0.1)) <= 1e-15 * 0.1 * 0.1);
}

TEST_CASE("critical exponent") {
    ModulationCoefficients c = coeffs_of(2.0, 2.0, 0.0, 1.0);  // te_wb = 4, te_b = 2
    CHECK(mu_critical(c, 0.01) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(mu_critical(c, 0.0) == 0.0);

    const ModulationCoefficients kdv =
        compute_coefficients(DispersionSymbol::catalog(SymbolKind::kdv));
    CHECK_THROWS_AS(mu_critical(kdv, 0.01), NotUnstable);
}

TEST_CASE("branches at zero amplitude are purely imaginary") {
    const BenjaminFeirBranch b = eigenvalue_branches(whitham2, 0.0, linspace(0.0, 0.05, 21));
    for (std::size_t i = 0; i < b.mu_grid.size(); ++i) {
        CHECK(b.lambda0[i].real() == 0.0);
        CHECK(b.lambda1_plus[i].real() == 0.0);
        CHECK(b.lambda1_minus[i].real() == 0.0);
    }
}

TEST_CASE("all three eigenvalues vanish at mu = 0") {
    const BenjaminFeirBranch b = eigenvalue_branches(whitham2, 0.01, {0.0});
    CHECK(std::abs(b.lambda0[0]) == 0.0);
    CHECK(std::abs(b.lambda1_plus[0]) == 0.0);
    CHECK(std::abs(b.lambda1_minus[0]) == 0.0);
}

TEST_CASE("real part at mu_crit/sqrt(2)") {
    const double eps = 0.01;
    const double mu = mu_critical(whitham2, eps) / std::sqrt(2.0);
    const BenjaminFeirBranch b = eigenvalue_branches(whitham2, eps, {mu});
    // Re lambda_1^+ = mu sqrt(Delta) with Delta = te_wb eps^2 / 2 there.
    CHECK(b.lambda1_plus[0].real() ==
          doctest::Approx(mu * eps * std::sqrt(whitham2.te_wb / 2.0)).epsilon(1e-12));
    CHECK(b.lambda1_minus[0].real() == doctest::Approx(-b.lambda1_plus[0].real()).epsilon(1e-15));
}

TEST_CASE("branch structure across the critical exponent") {
    const double eps = 0.01;
    const double mu_c = mu_critical(whitham2, eps);
    const BenjaminFeirBranch b = eigenvalue_branches(whitham2, eps, linspace(0.0, 2 * mu_c, 41));
    for (std::size_t i = 0; i < b.mu_grid.size(); ++i) {
        const double mu = b.mu_grid[i];
        CHECK(b.lambda0[i].real() == 0.0);  // lambda_0 purely imaginary
        CHECK(b.lambda1_plus[i].real() ==
              doctest::Approx(-b.lambda1_minus[i].real()).epsilon(1e-15));
        if (mu > 0.0 && mu < mu_c) {
            CHECK(b.lambda1_plus[i].real() > 0.0);
        } else {
            CHECK(b.lambda1_plus[i].real() == 0.0);  // vanishes past mu_crit
        }
        // Trace identity: Im l+ + Im l- = -2 te12 mu.
        CHECK(b.lambda1_plus[i].imag() + b.lambda1_minus[i].imag() ==
              doctest::Approx(-2.0 * whitham2.te12 * mu).epsilon(1e-12));
        // lambda_0 / mu -> i te33.
        if (mu > 0.0)
            CHECK(b.lambda0[i].imag() / mu == doctest::Approx(whitham2.te33).epsilon(1e-12));
    }
}

TEST_CASE("stable coefficients keep every real part at zero") {
    const ModulationCoefficients kdv =
        compute_coefficients(DispersionSymbol::catalog(SymbolKind::kdv));
    const BenjaminFeirBranch b = eigenvalue_branches(kdv, 0.01, linspace(0.0, 0.05, 21));
    for (std::size_t i = 0; i < b.mu_grid.size(); ++i) {
        CHECK(b.lambda1_plus[i].real() == 0.0);
        CHECK(b.lambda1_minus[i].real() == 0.0);
    }
}

TEST_CASE("figure-8 endpoints and symmetry") {
    const double eps = 0.01;
    const Figure8Curve curve = figure8_curve(whitham2, eps, 64);
    const double mu_c = mu_critical(whitham2, eps);

    CHECK(curve.points.front()[0] == 0.0);
    CHECK(curve.points.front()[1] == 0.0);
    CHECK(curve.points.back()[0] == 0.0);
    CHECK(curve.points.back()[1] == doctest::Approx(0.0));

    // Top of the first lobe: (0, -te12 mu_crit).
    double top = 0.0;
    for (const auto& p : curve.points) top = std::max(top, std::abs(p[1]));
    CHECK(top == doctest::Approx(std::abs(whitham2.te12) * mu_c).epsilon(1e-12));

    // Mirror symmetry in both axes: every point has its reflections on the curve.
    auto contains = [&](double x, double y) {
        for (const auto& p : curve.points)
            if (std::abs(p[0] - x) < 1e-14 && std::abs(p[1] - y) < 1e-14) return true;
        return false;
    };
    for (std::size_t i = 0; i < curve.points.size(); i += 17) {
        const auto& p = curve.points[i];
        CHECK(contains(-p[0], p[1]));
        CHECK(contains(p[0], -p[1]));
    }
}

TEST_CASE("max real part on the curve matches the closed form") {
    const double eps = 0.01;
    // Dense sampling is the oracle for the analytic maximizer.
    const Figure8Curve dense = figure8_curve(whitham2, eps, 20000);
    const GrowthRate g = max_growth_rate(whitham2, eps);
    CHECK(dense.max_re == doctest::Approx(g.rate).epsilon(1e-7));
    CHECK(g.rate ==
          doctest::Approx(whitham2.te_wb * eps * eps / (2.0 * std::abs(whitham2.te_b)))
              .epsilon(1e-15));

    // Synthetic numbers: te_wb = 1, te_b = 1, eps = 0.1 gives rate 0.005.
    const ModulationCoefficients c = coeffs_of(1.0, 1.0, 1.0, 1.0);
    CHECK(max_growth_rate(c, 0.1).rate == doctest::Approx(0.005).epsilon(1e-15));
    CHECK(max_growth_rate(c, 0.0).rate == 0.0);

    // Grid maximum of Re lambda_1^+ agrees with the closed form.
    const double mu_c = mu_critical(whitham2, eps);
    double grid_max = 0.0;
    const BenjaminFeirBranch b =
        eigenvalue_branches(whitham2, eps, linspace(0.0, mu_c, 200001));
    for (const auto& l : b.lambda1_plus) grid_max = std::max(grid_max, l.real());
    CHECK(grid_max == doctest::Approx(g.rate).epsilon(1e-9));
    // And the maximizer sits at eps sqrt(te_wb / (2 te_b^2)).
    CHECK(g.mu_star == doctest::Approx(mu_c / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("figure-8 refuses stable coefficients") {
    const ModulationCoefficients kdv =
        compute_coefficients(DispersionSymbol::catalog(SymbolKind::kdv));
    CHECK_THROWS_AS(figure8_curve(kdv, 0.01, 64), NotUnstable);
    CHECK_THROWS_AS(max_growth_rate(kdv, 0.01), NotUnstable);
    CHECK_THROWS_AS(figure8_curve(whitham2, 0.01, 8), InvalidParameter);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(eigenvalue_branches(whitham2, 0.01, {0.2, 0.1}), InvalidParameter);
    CHECK_THROWS_AS(eigenvalue_branches(whitham2, 0.01, {-0.1, 0.1}), InvalidParameter);
}
