#pragma once

#include <vector>

#include "cohmix/error.hpp"
#include "cohmix/state.hpp"

namespace cohmix {

/// Member (1-p)/d I + p |psi_d><psi_d| of the maximally coherent mixed
/// family. Constructed only through make_mcms_params.
struct McmsParams {
  int dim = 2;
  double p = 0.0;
};

/// Throws DimensionTooSmall for d < 2 and ParamOutOfRange unless 0 <= p <= 1.
McmsParams make_mcms_params(int d, double p);

DensityMatrix mcms_state(const McmsParams& params);

/// p = sqrt(1 - m_f), so that M_l(mcms_state) = m_f.
McmsParams mcms_from_mixedness(int d, double m_f);

/// Uniform-diagonal state whose off-diagonal pair (j, k), j < k in
/// lexicographic order, equals (R/2) exp(i theta_jk) with
/// R = 2 sqrt(1 - M_f) / d.
struct CircleStateParams {
  int dim = 2;
  double mixedness_target = 1.0;
  std::vector<double> thetas;  // length (d^2 - d) / 2

  double radius() const;
};

/// Throws LengthMismatch, ParamOutOfRange, or NotPSD when the phase pattern
/// does not describe a positive matrix.
DensityMatrix circle_state(const CircleStateParams& params);

struct CanonicalForm {
  DensityMatrix state;    // U rho U^dagger
  ComplexMatrix unitary;  // diag(exp(-i gamma_n)), gamma_0 = 0
};

/// Raised by canonicalize_phases when the off-diagonal phases are not of the
/// form phi_jk = gamma_j - gamma_k. Carries the partially canonicalized state.
class InconsistentPhasesError : public Error {
public:
  InconsistentPhasesError(CanonicalForm partial, double residual);
  const CanonicalForm& partial() const noexcept { return partial_; }
  double residual() const noexcept { return measured(); }

private:
  CanonicalForm partial_;
};

inline constexpr double kPhaseConsistencyTol = 1e-8;

/// Removes off-diagonal phases of a uniform-modulus circle state with a
/// diagonal-phase (incoherent) unitary fixed on the spanning tree rooted at
/// index 0, then checks every remaining pair. Throws NotCircleState when the
/// diagonal or off-diagonal moduli are not uniform (to 1e-8) and
/// InconsistentPhasesError when the residual exceeds 1e-8.
CanonicalForm canonicalize_phases(const DensityMatrix& rho);

/// |1 - C_l1^2/(d-1)^2 - M_l|.
double complementarity_residual(const DensityMatrix& rho);

}  // namespace cohmix
