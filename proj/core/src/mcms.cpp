#include "cohmix/mcms.hpp"

#include <cmath>
#include <string>

#include "cohmix/measures.hpp"

namespace cohmix {

McmsParams make_mcms_params(int d, double p) {
  if (d < 2) raise(ErrorKind::DimensionTooSmall, "MCMS needs d >= 2", d);
  if (!(p >= 0.0 && p <= 1.0)) raise(ErrorKind::ParamOutOfRange, "p must lie in [0, 1]", p);
  return {d, p};
}

DensityMatrix mcms_state(const McmsParams& params) {
  const McmsParams checked = make_mcms_params(params.dim, params.p);
  const int d = checked.dim;
  ComplexMatrix m = ComplexMatrix::Constant(d, d, Complex{checked.p / d, 0.0});
  m.diagonal().setConstant(Complex{1.0 / d, 0.0});
  return DensityMatrix::make(std::move(m));
}

McmsParams mcms_from_mixedness(int d, double m_f) {
  if (!(m_f >= 0.0 && m_f <= 1.0)) raise(ErrorKind::ParamOutOfRange, "mixedness must lie in [0, 1]", m_f);
  return make_mcms_params(d, std::sqrt(1.0 - m_f));
}

double CircleStateParams::radius() const {
  return 2.0 * std::sqrt(1.0 - mixedness_target) / dim;
}

DensityMatrix circle_state(const CircleStateParams& params) {
  const int d = params.dim;
  if (d < 2) raise(ErrorKind::DimensionTooSmall, "circle states need d >= 2", d);
  if (!(params.mixedness_target >= 0.0 && params.mixedness_target <= 1.0)) {
    raise(ErrorKind::ParamOutOfRange, "mixedness target must lie in [0, 1]", params.mixedness_target);
  }
  const std::size_t pairs = static_cast<std::size_t>(d) * (d - 1) / 2;
  if (params.thetas.size() != pairs) {
    raise(ErrorKind::LengthMismatch, "expected " + std::to_string(pairs) + " angles, got " +
                                         std::to_string(params.thetas.size()));
  }
  const double half_radius = 0.5 * params.radius();
  ComplexMatrix m = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  std::size_t idx = 0;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k, ++idx) {
      m(j, k) = std::polar(half_radius, params.thetas[idx]);
      m(k, j) = std::conj(m(j, k));
    }
  }
  return DensityMatrix::make(std::move(m));
}

InconsistentPhasesError::InconsistentPhasesError(CanonicalForm partial, double residual)
    : Error(ErrorKind::InconsistentPhases, "off-diagonal phases admit no gamma_j - gamma_k assignment",
            residual),
      partial_(std::move(partial)) {}

CanonicalForm canonicalize_phases(const DensityMatrix& rho) {
  const int d = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  if (d < 2) raise(ErrorKind::DimensionTooSmall, "canonicalization needs d >= 2", d);

  const double diag_spread = (m.diagonal().real().array() - 1.0 / d).abs().maxCoeff();
  if (diag_spread > kPhaseConsistencyTol) raise(ErrorKind::NotCircleState, "diagonal is not uniform", diag_spread);

  double mean_modulus = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) mean_modulus += std::abs(m(j, k));
  mean_modulus /= d * (d - 1) / 2.0;
  double modulus_spread = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k)
      modulus_spread = std::max(modulus_spread, std::abs(std::abs(m(j, k)) - mean_modulus));
  if (modulus_spread > kPhaseConsistencyTol) {
    raise(ErrorKind::NotCircleState, "off-diagonal moduli are not uniform", modulus_spread);
  }

  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  if (mean_modulus == 0.0) return {rho, u};

  // Spanning tree rooted at 0: phi_0k = gamma_0 - gamma_k with gamma_0 = 0.
  for (int k = 1; k < d; ++k) u(k, k) = std::polar(1.0, std::arg(m(0, k)));

  DensityMatrix rotated = DensityMatrix::make(hermitian_part(u * m * u.adjoint()));
  double residual = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k)
      residual = std::max(residual, std::abs(rotated(j, k) - std::abs(rotated(j, k))));

  CanonicalForm form{std::move(rotated), std::move(u)};
  if (residual > kPhaseConsistencyTol) throw InconsistentPhasesError(std::move(form), residual);
  return form;
}

double complementarity_residual(const DensityMatrix& rho) {
  return std::abs(tradeoff_residual(rho));
}

}  // namespace cohmix
