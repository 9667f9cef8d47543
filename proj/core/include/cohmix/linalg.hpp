#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cohmix {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Centralized tolerances. Eigenvalues in [-kPsdTol, 0] are treated as
// round-off and clamped; anything more negative is an invalid state.
inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kReconTol = 1e-9;

struct EigenDecomposition {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors;  // column k pairs with eigenvalue k
};

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const ComplexMatrix& m);

/// max |m - m^dagger|.
double hermiticity_violation(const ComplexMatrix& m);

/// max |u u^dagger - I|.
double unitarity_violation(const ComplexMatrix& u);

bool all_finite(const ComplexMatrix& m);

/// Full spectral decomposition of a Hermitian matrix, eigenvalues ascending.
/// Throws NotSquare, NonFinite, or NotHermitian.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-kPsdTol, 0] are clamped to
/// zero; more negative eigenvalues raise NotPSD.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Uhlmann fidelity (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2 of two PSD
/// matrices, clamped to [0, 1]. Throws DimensionMismatch.
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// Tr(m^k) by repeated multiplication.
Complex trace_power(const ComplexMatrix& m, int k);

/// (m + m^dagger) / 2, used to scrub round-off asymmetry after products.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

}  // namespace cohmix
