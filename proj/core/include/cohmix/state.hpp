#pragma once

#include <vector>

#include "cohmix/linalg.hpp"

namespace cohmix {

/// A validated d x d density matrix: Hermitian, unit trace and PSD, each to
/// the tolerances in linalg.hpp. Immutable once constructed; the coherence
/// reference basis is always the computational basis.
class DensityMatrix {
public:
  /// Validates and wraps `entries`. Throws NotSquare, NonFinite,
  /// NotHermitian, TraceNotOne or NotPSD with the measured violation.
  static DensityMatrix make(ComplexMatrix entries);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  /// Eigenvalues ascending, computed at validation time.
  const RealVector& spectrum() const noexcept { return spectrum_; }

private:
  DensityMatrix(ComplexMatrix m, RealVector spectrum)
      : m_(std::move(m)), spectrum_(std::move(spectrum)) {}

  ComplexMatrix m_;
  RealVector spectrum_;
};

inline DensityMatrix make_state(ComplexMatrix entries) {
  return DensityMatrix::make(std::move(entries));
}

/// Coefficients A_1..A_d of det(lambda I - rho) = sum_i (-1)^i A_i lambda^{d-i}
/// (A_0 = 1 implicit). coeffs[i-1] holds A_i.
struct CharPolyCoefficients {
  std::vector<double> coeffs;
};

/// A_i via Newton's identities on the power sums Tr(m^k). Works for any
/// Hermitian matrix; for states A_1 = 1.
CharPolyCoefficients char_poly_coefficients(const ComplexMatrix& m);
CharPolyCoefficients char_poly_coefficients(const DensityMatrix& rho);

/// PSD test through the sign of the characteristic-polynomial coefficients:
/// true iff every A_i >= -1e-9. Throws NotHermitian.
bool is_psd_by_charpoly(const ComplexMatrix& m);

inline constexpr double kCharPolyTol = 1e-9;

/// Diagonal part of rho in the computational basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// S(rho) = -Tr(rho ln rho) in nats, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy (nats) of a probability vector; used for S(dephase(rho)).
double shannon_entropy(const RealVector& probabilities);

/// U rho U^dagger, revalidated. Throws NotUnitary or DimensionMismatch.
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

/// |psi_d><psi_d| with |psi_d> the uniform superposition; every entry 1/d.
DensityMatrix maximally_coherent_pure(int d);

/// I/d.
DensityMatrix maximally_mixed(int d);

/// Projector onto computational basis state |k>.
DensityMatrix basis_state(int d, int k);

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace cohmix
