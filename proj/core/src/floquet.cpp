#include "gkdv/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gkdv/errors.hpp"

namespace gkdv {

namespace {

std::complex<double> to_lambda(const std::complex<double>& nu) {
    // L = i * generator, so an eigenvalue nu of the generator maps to i*nu.
    return {-nu.imag(), nu.real()};
}

}  // namespace

double omega(const DispersionSymbol& sym, int j, double mu) {
    const double z = static_cast<double>(j) + mu;
    return z * (sym(1.0) - sym(z));
}

FloquetMatrix assemble(const DispersionSymbol& sym, const StokesWave& wave, double mu,
                       int n_modes) {
    if (n_modes < wave.modes() + 8)
        throw TruncationTooSmall("assemble: n_modes must be >= wave modes + 8");

    FloquetMatrix mat;
    mat.n_modes = n_modes;
    mat.mu = mu;
    mat.wave = wave;

    const int dim = mat.size();
    mat.generator = Eigen::MatrixXd::Zero(dim, dim);

    // uhat_0 = a_0, uhat_{+-n} = a_n / 2.
    auto uhat = [&](int n) -> double {
        const int an = std::abs(n);
        if (an >= static_cast<int>(wave.cos_coeffs.size())) return 0.0;
        return an == 0 ? wave.cos_coeffs[0] : 0.5 * wave.cos_coeffs[an];
    };

    for (int k = -n_modes; k <= n_modes; ++k) {
        const double prefactor = static_cast<double>(k) + mu;
        const double diag = wave.speed - sym(prefactor);
        for (int j = -n_modes; j <= n_modes; ++j) {
            double entry = -2.0 * uhat(k - j);
            if (k == j) entry += diag;
            mat.generator(k + n_modes, j + n_modes) = prefactor * entry;
        }
    }
    return mat;
}

std::vector<std::complex<double>> eigenvalues(const FloquetMatrix& mat) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(mat.generator, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw EigensolverFailure("real Schur iteration failed to converge");
    std::vector<std::complex<double>> lambdas;
    lambdas.reserve(static_cast<std::size_t>(mat.size()));
    for (int i = 0; i < mat.size(); ++i) lambdas.push_back(to_lambda(solver.eigenvalues()(i)));
    return lambdas;
}

std::array<std::complex<double>, 3> eigs_near_zero(const FloquetMatrix& mat, double radius) {
    std::vector<std::complex<double>> inside;
    for (const auto& lambda : eigenvalues(mat))
        if (std::abs(lambda) < radius) inside.push_back(lambda);
    if (inside.size() != 3)
        throw WrongCount("expected 3 eigenvalues inside radius " + std::to_string(radius) +
                         ", found " + std::to_string(inside.size()));
    std::sort(inside.begin(), inside.end(),
              [](const auto& a, const auto& b) { return a.imag() < b.imag(); });
    return {inside[0], inside[1], inside[2]};
}

RieszProjector riesz_projector(const FloquetMatrix& mat, double radius, int n_quad) {
    const int dim = mat.size();
    const Eigen::MatrixXcd L = mat.complex_matrix();
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);

    RieszProjector proj;
    proj.radius = radius;
    proj.n_quad = n_quad;
    proj.projector = Eigen::MatrixXcd::Zero(dim, dim);

    // P = -(1/2 pi i) oint (L - lambda)^{-1} dlambda
    //   = -(r / n) sum_m e^{i theta_m} (L - lambda_m)^{-1},  lambda_m = r e^{i theta_m}.
    for (int m = 0; m < n_quad; ++m) {
        const double theta = 2.0 * M_PI * m / n_quad;
        const std::complex<double> node = std::polar(radius, theta);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(L - node * identity);
        const Eigen::MatrixXcd resolvent = lu.solve(identity);
        // A contour node on top of an eigenvalue shows up as a resolvent blow-up.
        if (!resolvent.allFinite() || resolvent.norm() > 1.0e14)
            throw ContourHitsSpectrum("resolvent ill-conditioned at contour node " +
                                      std::to_string(m));
        proj.projector -= (radius / n_quad) * std::polar(1.0, theta) * resolvent;
    }

    proj.idempotency_defect = (proj.projector * proj.projector - proj.projector).norm();
    proj.commutation_defect = (proj.projector * L - L * proj.projector).norm();

    // Rank and an orthonormal basis of range(P) from the SVD.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(proj.projector, Eigen::ComputeThinU);
    proj.rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 0.5) ++proj.rank;
    if (proj.rank != 3)
        throw RankNotThree("Riesz projector rank " + std::to_string(proj.rank) +
                           " (expected 3); radius " + std::to_string(radius));

    const Eigen::MatrixXcd basis = svd.matrixU().leftCols(3);
    proj.reduced = basis.adjoint() * L * basis;
    return proj;
}

double default_contour_radius(const ModulationCoefficients& coeffs, double gap_c0, double mu,
                              double epsilon) {
    const double scale =
        std::max({1.0, std::abs(coeffs.te12) + std::abs(coeffs.te_b), std::abs(coeffs.te33)});
    return std::min(gap_c0 / 4.0, 10.0 * (std::abs(epsilon) + std::abs(mu)) * scale);
}

ComparisonReport compare_asymptotics(const DispersionSymbol& sym, double epsilon,
                                     const std::vector<double>& mu_grid, int n_modes) {
    const Classification cls = classify(sym);
    if (cls.value == StabilityClass::degenerate)
        throw DegenerateCoefficient(cls.reason, "compare_asymptotics: symbol is degenerate (" +
                                                    cls.reason + ")");
    const ModulationCoefficients coeffs = compute_coefficients(sym);
    const AssumptionAReport a = check_assumption_a(sym);

    const int wave_modes = std::clamp(n_modes - 8, 8, 24);
    const StokesWave wave = epsilon == 0.0 ? second_order_expansion(sym, 0.0)
                                           : solve_newton(sym, epsilon, wave_modes, 1.0e-12);

    BenjaminFeirBranch branch = eigenvalue_branches(coeffs, epsilon, mu_grid);

    ComparisonReport report;
    report.epsilon = epsilon;
    report.n_modes = n_modes;

    for (std::size_t i = 0; i < mu_grid.size(); ++i) {
        const double mu = mu_grid[i];
        const FloquetMatrix mat = assemble(sym, wave, mu, n_modes);
        const double radius = default_contour_radius(coeffs, a.gap_c0, mu, epsilon);
        ComparisonRecord rec;
        rec.mu = mu;
        rec.numeric = eigs_near_zero(mat, radius);
        rec.asymptotic = {branch.lambda0[i], branch.lambda1_plus[i], branch.lambda1_minus[i]};

        // Minimal-distance pairing over the six bijections of three items,
        // with ties broken by the imaginary-part order of the candidates.
        std::array<int, 3> perm = {0, 1, 2};
        std::array<int, 3> best = perm;
        double best_cost = std::numeric_limits<double>::infinity();
        std::sort(perm.begin(), perm.end());
        do {
            double cost = 0.0;
            for (int k = 0; k < 3; ++k) cost += std::abs(rec.numeric[k] - rec.asymptotic[perm[k]]);
            if (cost < best_cost - 1.0e-15) {
                best_cost = cost;
                best = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        const auto asym = rec.asymptotic;
        for (int k = 0; k < 3; ++k) {
            rec.asymptotic[k] = asym[best[k]];
            rec.abs_err[k] = std::abs(rec.numeric[k] - rec.asymptotic[k]);
            rec.rel_err[k] = rec.abs_err[k] / (1.0 + std::abs(rec.numeric[k]));
            rec.max_re_numeric = std::max(rec.max_re_numeric, std::abs(rec.numeric[k].real()));
            report.max_abs_err = std::max(report.max_abs_err, rec.abs_err[k]);
        }
        report.max_re_numeric = std::max(report.max_re_numeric, rec.max_re_numeric);
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace gkdv
