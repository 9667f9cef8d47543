#pragma once

#include <cstdint>
#include <vector>

#include "cohmix/gellmann.hpp"
#include "cohmix/state.hpp"

namespace cohmix {

struct OptimizerConfig {
  int restarts = 16;
  int max_iterations = 4000;  // per penalty stage / per fidelity restart
  double step_size = 1.0;     // initial line-search step
  double penalty_weight = 1e5;  // final-stage weight 1/epsilon
  double tolerance = 1e-9;      // gradient-norm / step convergence threshold
  std::uint64_t seed = 0;
  int threads = 1;  // restarts run concurrently when > 1; results unchanged

  /// Throws ParamOutOfRange unless every field is positive and
  /// tolerance <= 1e-4.
  void validate() const;
};

struct Optimum {
  DensityMatrix state;
  double objective = 0.0;
  double constraint_violation = 0.0;
  int iterations_used = 0;
  bool converged = false;
};

/// Maximizes C_l1 over states with M_l = m_f. Each restart optimizes an
/// unconstrained complex factor L (rho = L L^dagger / Tr L L^dagger) against
/// C_l1 - w (M_l - m_f)^2 with w annealed over three stages, then moves the
/// result radially in Bloch space onto the constraint sphere. A stage
/// converges when the gradient norm drops below cfg.tolerance or the objective
/// stops rising by more than cfg.tolerance (relative) over 20 steps. Non-convergence
/// is reported through `converged == false`, never thrown.
/// Throws DimensionTooSmall / ParamOutOfRange on bad arguments.
Optimum max_coherence_at_mixedness(int d, double m_f, const OptimizerConfig& cfg);

struct StationarityReport {
  std::vector<double> pair_radii;    // sqrt(x_i^2 + x_{i+D/2}^2)
  std::vector<double> w_components;  // diagonal-generator coordinates
  double max_radius_spread = 0.0;    // max - min of pair_radii
  double max_w = 0.0;                // max |w|
};

inline constexpr double kStationarityTol = 1e-6;

/// Stationary points of the fixed-mixedness problem have all pair radii equal
/// and every diagonal-generator coordinate zero.
StationarityReport stationarity_check(const BlochVector& x);

inline bool is_stationary(const StationarityReport& r, double tol = kStationarityTol) {
  return r.max_radius_spread <= tol && r.max_w <= tol;
}

struct IncoherentFidelity {
  DensityMatrix sigma;  // diagonal maximizer
  double value = 0.0;
  bool converged = false;
};

/// max over diagonal sigma of F(rho, sigma), by projected gradient ascent on
/// the probability simplex started from dephase(rho), the uniform point and
/// cfg.restarts - 2 random points, using the analytic gradient. Throws
/// NotConverged if no restart reaches projected-gradient stationarity within
/// cfg.max_iterations.
IncoherentFidelity max_fidelity_incoherent(const DensityMatrix& rho,
                                           const OptimizerConfig& cfg);

/// Euclidean projection onto the probability simplex.
RealVector project_to_simplex(const RealVector& v);

}  // namespace cohmix
