#include "cohmix/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "cohmix/error.hpp"

namespace cohmix {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_violation(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

double unitarity_violation(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols()));
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) return false;
  }
  return true;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    raise(ErrorKind::NotSquare, "matrix is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
  }
  if (!all_finite(m)) raise(ErrorKind::NonFinite, "matrix has NaN or Inf entries");
  const double herm = hermiticity_violation(m);
  if (herm > kHermiticityTol) raise(ErrorKind::NotHermitian, "max |m - m^dagger|", herm);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  const EigenDecomposition eig = hermitian_eig(m);
  const double min_eval = eig.eigenvalues.minCoeff();
  if (min_eval < -kPsdTol) raise(ErrorKind::NotPSD, "minimum eigenvalue", min_eval);
  const RealVector roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors * roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    raise(ErrorKind::DimensionMismatch, "fidelity of " + std::to_string(rho.rows()) + " and " +
                                            std::to_string(sigma.rows()) + " dimensional states");
  }
  // Tr sqrt(sqrt(sigma) rho sqrt(sigma)) is the sum of singular values of
  // sqrt(rho) sqrt(sigma) = V_r L_r^{1/2} (V_r^dagger V_s) L_s^{1/2} V_s^dagger. Taking singular values
  // of the middle factor avoids square roots of round-off sized eigenvalues.
  const EigenDecomposition er = hermitian_eig(rho);
  const EigenDecomposition es = hermitian_eig(sigma);
  for (double lo : {er.eigenvalues.minCoeff(), es.eigenvalues.minCoeff()}) {
    if (lo < -kPsdTol) raise(ErrorKind::NotPSD, "minimum eigenvalue", lo);
  }
  // Eigenvalues within solver round-off of zero are zeroed; their square
  // roots would otherwise add O(1e-8) to the trace.
  const auto roots = [](const RealVector& l) -> ComplexMatrix {
    const double floor = 4.0 * l.size() * std::numeric_limits<double>::epsilon() * std::max(1.0, l.maxCoeff());
    return (l.array() > floor).select(l.cwiseSqrt(), 0.0).cast<Complex>().matrix().asDiagonal();
  };
  const ComplexMatrix middle = roots(er.eigenvalues) * (er.eigenvectors.adjoint() * es.eigenvectors) *
                               roots(es.eigenvalues);
  const double trace_root = Eigen::JacobiSVD<ComplexMatrix>(middle).singularValues().sum();
  return std::clamp(trace_root * trace_root, 0.0, 1.0);
}

Complex trace_power(const ComplexMatrix& m, int k) {
  if (m.rows() != m.cols() || m.rows() == 0) raise(ErrorKind::NotSquare, "trace_power needs a square matrix");
  if (k < 1) raise(ErrorKind::ParamOutOfRange, "power must be >= 1", k);
  ComplexMatrix power = m;
  for (int i = 1; i < k; ++i) power = power * m;
  return power.trace();
}

}  // namespace cohmix
