#pragma once

#include <optional>

#include "cohmix/optimizer.hpp"
#include "cohmix/state.hpp"

namespace cohmix {

/// Sum of moduli of the off-diagonal entries.
double l1_coherence(const DensityMatrix& rho);

/// C_r = S(dephase(rho)) - S(rho), in nats.
double relative_entropy_coherence(const DensityMatrix& rho);

/// Closed form (1 - sqrt(1 - 4|c|^2)) / 2 for qubits. Throws WrongDimension.
double geometric_coherence_qubit(const DensityMatrix& rho);

/// 1 - max over incoherent sigma of F(rho, sigma), computed numerically.
/// Throws OptimizerFailed when the fidelity maximization does not converge.
double geometric_coherence_numeric(const DensityMatrix& rho,
                                   const OptimizerConfig& cfg = {});

/// Normalized linear entropy d/(d-1) (1 - Tr rho^2). Throws WrongDimension
/// for d = 1.
double linear_entropy_mixedness(const DensityMatrix& rho);

/// F(rho, I/d) evaluated as (Tr sqrt(rho))^2 / d.
double geometric_mixedness(const DensityMatrix& rho);

/// 1 - C_l1^2/(d-1)^2 - M_l; non-negative for every state.
double tradeoff_residual(const DensityMatrix& rho);

/// |C_l1^2 + M_l - 4a(1-a)| for a qubit with rho_00 = a. Throws
/// WrongDimension.
double qubit_identity_check(const DensityMatrix& rho);

/// 1 - (C_r + S) / ln d, which equals 1 - S(dephase(rho)) / ln d.
double entropic_tradeoff_residual(const DensityMatrix& rho);

struct MeasureReport {
  int dim = 0;
  double c_l1 = 0.0;
  double c_rel_entropy = 0.0;
  std::optional<double> c_geometric;
  double m_linear = 0.0;
  double m_von_neumann = 0.0;
  double m_geometric = 0.0;
  double tradeoff_residual = 0.0;
};

/// All measures for one state. c_geometric uses the closed form for qubits;
/// for d > 2 it is filled only when `numeric_geometric` is given.
MeasureReport measure_report(const DensityMatrix& rho,
                             const std::optional<OptimizerConfig>& numeric_geometric = std::nullopt);

}  // namespace cohmix
