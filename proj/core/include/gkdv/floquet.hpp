#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "gkdv/spectrum.hpp"
#include "gkdv/stokes.hpp"
#include "gkdv/symbol.hpp"

namespace gkdv {

/// Dense Galerkin truncation of the Bloch operator at Floquet exponent mu,
/// L[k,j] = i(k+mu) [ (c - m(k+mu)) delta_kj - 2 uhat_{k-j} ],
/// on Fourier modes k, j in [-N, N]. The matrix is i times a real matrix
/// (the wave coefficients are real and even), which is stored; complex
/// eigenvalues inherit the Hamiltonian pairing exactly from the real Schur
/// form.
struct FloquetMatrix {
    int n_modes = 0;  // N; dimension is 2N+1
    double mu = 0.0;
    StokesWave wave;            // the wave the truncation was built from
    Eigen::MatrixXd generator;  // L = i * generator

    double epsilon() const { return wave.epsilon; }
    int size() const { return 2 * n_modes + 1; }
    /// Entry indexed by mode numbers k, j in [-N, N].
    std::complex<double> entry(int k, int j) const {
        return {0.0, generator(k + n_modes, j + n_modes)};
    }
    Eigen::MatrixXcd complex_matrix() const {
        return std::complex<double>(0.0, 1.0) * generator.cast<std::complex<double>>();
    }
};

/// Unperturbed dispersion curve omega_{j,mu} = (j+mu)(m(1) - m(j+mu)).
double omega(const DispersionSymbol& sym, int j, double mu);

/// Assembles the truncated operator for a wave from the stokes module.
/// Requires n_modes >= wave modes + 8 (TruncationTooSmall otherwise).
FloquetMatrix assemble(const DispersionSymbol& sym, const StokesWave& wave, double mu,
                       int n_modes);

/// Full spectrum of the truncation.
std::vector<std::complex<double>> eigenvalues(const FloquetMatrix& mat);

/// Exactly the eigenvalues inside the disk |lambda| < radius, which must be
/// three of them (WrongCount otherwise); sorted by imaginary part.
std::array<std::complex<double>, 3> eigs_near_zero(const FloquetMatrix& mat, double radius);

/// Contour-integral spectral projector P = -(1/2 pi i) oint (L-lambda)^{-1} dlambda
/// over the circle of the given radius, by the trapezoid rule (spectrally
/// accurate for analytic integrands on circles).
struct RieszProjector {
    double radius = 0.0;
    int n_quad = 0;
    Eigen::MatrixXcd projector;
    int rank = 0;
    Eigen::Matrix3cd reduced;  // L restricted to range(P) in an orthonormal basis
    double idempotency_defect = 0.0;  // ||P^2 - P||
    double commutation_defect = 0.0;  // ||PL - LP||
};
RieszProjector riesz_projector(const FloquetMatrix& mat, double radius, int n_quad = 64);

/// Default contour radius min(c0/4, 10 (|eps|+|mu|) scale), kept inside the
/// spectral gap certified by check_assumption_a.
double default_contour_radius(const ModulationCoefficients& coeffs, double gap_c0, double mu,
                              double epsilon);

/// Per-mu comparison of the truncated spectrum near zero against the
/// leading-order branches, paired by a minimal-distance bijection.
struct ComparisonRecord {
    double mu = 0.0;
    std::array<std::complex<double>, 3> numeric{};
    std::array<std::complex<double>, 3> asymptotic{};
    std::array<double, 3> abs_err{};
    std::array<double, 3> rel_err{};  // abs_err / (1 + |lambda_num|)
    double max_re_numeric = 0.0;
};

struct ComparisonReport {
    std::vector<ComparisonRecord> records;
    double epsilon = 0.0;
    int n_modes = 0;
    double max_abs_err = 0.0;
    double max_re_numeric = 0.0;
};

ComparisonReport compare_asymptotics(const DispersionSymbol& sym, double epsilon,
                                     const std::vector<double>& mu_grid, int n_modes);

}  // namespace gkdv
