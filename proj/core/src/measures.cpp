#include "cohmix/measures.hpp"

#include <algorithm>
#include <cmath>

#include "cohmix/error.hpp"

namespace cohmix {

namespace {

void require_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 2) raise(ErrorKind::WrongDimension, std::string(what) + " is defined for qubits only", rho.dim());
}

void require_nontrivial(const DensityMatrix& rho, const char* what) {
  if (rho.dim() < 2) raise(ErrorKind::WrongDimension, std::string(what) + " needs d >= 2", rho.dim());
}

}  // namespace

double l1_coherence(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  double c = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) c += std::abs(m(i, j));
  return c;
}

double relative_entropy_coherence(const DensityMatrix& rho) {
  const double dephased = shannon_entropy(rho.matrix().diagonal().real().cwiseMax(0.0));
  return std::max(0.0, dephased - von_neumann_entropy(rho));
}

double geometric_coherence_qubit(const DensityMatrix& rho) {
  require_qubit(rho, "closed-form geometric coherence");
  const double c = std::abs(rho(0, 1));
  return 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 4.0 * c * c)));
}

double geometric_coherence_numeric(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  try {
    return std::clamp(1.0 - max_fidelity_incoherent(rho, cfg).value, 0.0, 1.0);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotConverged) raise(ErrorKind::OptimizerFailed, e.what());
    throw;
  }
}

double linear_entropy_mixedness(const DensityMatrix& rho) {
  require_nontrivial(rho, "linear-entropy mixedness");
  const double d = rho.dim();
  // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
  const double purity = rho.matrix().squaredNorm();
  return d / (d - 1.0) * (1.0 - purity);
}

double geometric_mixedness(const DensityMatrix& rho) {
  if (rho.dim() == 2) {
    // (sqrt(l1) + sqrt(l2))^2 = tr + 2 sqrt(det); avoids the sqrt blow-up of
    // a round-off sized eigenvalue near pure states.
    const double a = rho(0, 0).real();
    const double b = rho(1, 1).real();
    const double det = a * b - std::norm(rho(0, 1));
    return 0.5 * (a + b + 2.0 * std::sqrt(std::max(det, 0.0)));
  }
  double trace_root = 0.0;
  for (double lambda : rho.spectrum()) trace_root += std::sqrt(std::max(lambda, 0.0));
  return trace_root * trace_root / rho.dim();
}

double tradeoff_residual(const DensityMatrix& rho) {
  require_nontrivial(rho, "trade-off residual");
  const double scaled = l1_coherence(rho) / (rho.dim() - 1.0);
  return 1.0 - scaled * scaled - linear_entropy_mixedness(rho);
}

double qubit_identity_check(const DensityMatrix& rho) {
  require_qubit(rho, "qubit identity");
  const double a = rho(0, 0).real();
  const double c = l1_coherence(rho);
  return std::abs(c * c + linear_entropy_mixedness(rho) - 4.0 * a * (1.0 - a));
}

double entropic_tradeoff_residual(const DensityMatrix& rho) {
  require_nontrivial(rho, "entropic trade-off residual");
  const double dephased = shannon_entropy(rho.matrix().diagonal().real().cwiseMax(0.0));
  return 1.0 - dephased / std::log(static_cast<double>(rho.dim()));
}

MeasureReport measure_report(const DensityMatrix& rho,
                             const std::optional<OptimizerConfig>& numeric_geometric) {
  MeasureReport r;
  r.dim = rho.dim();
  r.c_l1 = l1_coherence(rho);
  r.c_rel_entropy = relative_entropy_coherence(rho);
  if (rho.dim() == 2) {
    r.c_geometric = geometric_coherence_qubit(rho);
  } else if (numeric_geometric) {
    r.c_geometric = geometric_coherence_numeric(rho, *numeric_geometric);
  }
  r.m_linear = linear_entropy_mixedness(rho);
  r.m_von_neumann = von_neumann_entropy(rho);
  r.m_geometric = geometric_mixedness(rho);
  r.tradeoff_residual = tradeoff_residual(rho);
  return r;
}

}  // namespace cohmix
