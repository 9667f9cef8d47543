#include "cohmix/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "cohmix/error.hpp"

namespace cohmix {

DensityMatrix DensityMatrix::make(ComplexMatrix entries) {
  // hermitian_eig checks shape, finiteness and Hermiticity.
  EigenDecomposition eig = hermitian_eig(entries);
  const double trace_error = std::abs(entries.trace() - Complex{1.0, 0.0});
  if (trace_error > kTraceTol) raise(ErrorKind::TraceNotOne, "|Tr rho - 1|", trace_error);
  const double min_eval = eig.eigenvalues.minCoeff();
  if (min_eval < -kPsdTol) raise(ErrorKind::NotPSD, "minimum eigenvalue", min_eval);
  return DensityMatrix(std::move(entries), std::move(eig.eigenvalues));
}

CharPolyCoefficients char_poly_coefficients(const ComplexMatrix& m) {
  const int d = static_cast<int>(m.rows());
  // Power sums p_k = Tr(m^k), then e_k = (1/k) sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
  std::vector<double> power_sums(d + 1, 0.0);
  ComplexMatrix power = ComplexMatrix::Identity(d, d);
  for (int k = 1; k <= d; ++k) {
    power = power * m;
    power_sums[k] = power.trace().real();
  }
  std::vector<double> e(d + 1, 0.0);
  e[0] = 1.0;
  for (int k = 1; k <= d; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      acc += sign * e[k - i] * power_sums[i];
    }
    e[k] = acc / k;
  }
  return {std::vector<double>(e.begin() + 1, e.end())};
}

CharPolyCoefficients char_poly_coefficients(const DensityMatrix& rho) {
  return char_poly_coefficients(rho.matrix());
}

bool is_psd_by_charpoly(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) raise(ErrorKind::NotSquare, "is_psd_by_charpoly");
  if (!all_finite(m)) raise(ErrorKind::NonFinite, "matrix has NaN or Inf entries");
  const double herm = hermiticity_violation(m);
  if (herm > kHermiticityTol) raise(ErrorKind::NotHermitian, "max |m - m^dagger|", herm);
  const CharPolyCoefficients a = char_poly_coefficients(hermitian_part(m));
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](double c) { return c >= -kCharPolyTol; });
}

DensityMatrix dephase(const DensityMatrix& rho) {
  const ComplexMatrix diag = rho.matrix().diagonal().real().cast<Complex>().asDiagonal();
  return DensityMatrix::make(diag);
}

double shannon_entropy(const RealVector& probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  // Clamp round-off negatives; validation already rejected anything below -kPsdTol.
  return std::max(0.0, shannon_entropy(rho.spectrum().cwiseMax(0.0)));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    raise(ErrorKind::DimensionMismatch, "unitary is " + std::to_string(u.rows()) + "x" +
                                            std::to_string(u.cols()) + ", state has dim " +
                                            std::to_string(rho.dim()));
  }
  const double violation = unitarity_violation(u);
  if (!(violation <= kUnitaryTol)) raise(ErrorKind::NotUnitary, "max |U U^dagger - I|", violation);
  return DensityMatrix::make(hermitian_part(u * rho.matrix() * u.adjoint()));
}

DensityMatrix maximally_coherent_pure(int d) {
  if (d < 1) raise(ErrorKind::DimensionTooSmall, "dimension must be >= 1", d);
  return DensityMatrix::make(ComplexMatrix::Constant(d, d, Complex{1.0 / d, 0.0}));
}

DensityMatrix maximally_mixed(int d) {
  if (d < 1) raise(ErrorKind::DimensionTooSmall, "dimension must be >= 1", d);
  return DensityMatrix::make(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix basis_state(int d, int k) {
  if (d < 1) raise(ErrorKind::DimensionTooSmall, "dimension must be >= 1", d);
  if (k < 0 || k >= d) raise(ErrorKind::ParamOutOfRange, "basis index out of range", k);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(k, k) = 1.0;
  return DensityMatrix::make(std::move(m));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

}  // namespace cohmix
