#include "cohmix/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "cohmix/error.hpp"

namespace cohmix {

std::string_view to_string(MajorizationOrder order) noexcept {
  switch (order) {
    case MajorizationOrder::FirstMajorizes: return "FirstMajorizes";
    case MajorizationOrder::SecondMajorizes: return "SecondMajorizes";
    case MajorizationOrder::Equal: return "Equal";
    case MajorizationOrder::Incomparable: return "Incomparable";
  }
  return "Unknown";
}

std::string_view to_string(PlanKind kind) noexcept {
  return kind == PlanKind::MixedUnitary ? "MixedUnitary" : "Similarity";
}

namespace {

RealVector descending(const RealVector& ascending) { return ascending.reverse(); }

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    raise(ErrorKind::DimensionMismatch,
          "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

ComplexMatrix pauli_x() {
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

}  // namespace

MajorizationOrder majorization_compare(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const RealVector a = descending(rho.spectrum());
  const RealVector b = descending(sigma.spectrum());
  if ((a - b).lpNorm<Eigen::Infinity>() <= kMajorizationTol) return MajorizationOrder::Equal;

  bool first = true;
  bool second = true;
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    sum_a += a(k);
    sum_b += b(k);
    if (sum_a < sum_b - kMajorizationTol) first = false;
    if (sum_b < sum_a - kMajorizationTol) second = false;
  }
  if (first) return MajorizationOrder::FirstMajorizes;
  if (second) return MajorizationOrder::SecondMajorizes;
  return MajorizationOrder::Incomparable;
}

void TransformPlan::validate() const {
  if (components.empty()) raise(ErrorKind::ParamOutOfRange, "plan has no components");
  if (kind == PlanKind::Similarity && components.size() != 1) {
    raise(ErrorKind::ParamOutOfRange, "similarity plans hold exactly one unitary",
          static_cast<double>(components.size()));
  }
  const Eigen::Index d = components.front().unitary.rows();
  double total = 0.0;
  for (const PlanComponent& c : components) {
    if (!(c.weight >= 0.0)) raise(ErrorKind::ParamOutOfRange, "negative plan weight", c.weight);
    if (c.unitary.rows() != d || c.unitary.cols() != d) {
      raise(ErrorKind::DimensionMismatch, "plan unitaries differ in shape");
    }
    const double violation = unitarity_violation(c.unitary);
    if (!(violation <= kUnitaryTol)) raise(ErrorKind::NotUnitary, "plan component", violation);
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) raise(ErrorKind::ParamOutOfRange, "plan weights must sum to 1", total);
  if (!(residual >= 0.0)) raise(ErrorKind::ParamOutOfRange, "plan residual must be non-negative", residual);
}

ComplexMatrix fixed_coherence_qubit(double a, double alpha) {
  ComplexMatrix m(2, 2);
  m << a, alpha, alpha, 1.0 - a;
  return m;
}

DensityMatrix apply_plan(const TransformPlan& plan, const DensityMatrix& rho) {
  plan.validate();
  const Eigen::Index d = plan.components.front().unitary.rows();
  if (d != rho.dim()) {
    raise(ErrorKind::DimensionMismatch,
          "plan acts on dim " + std::to_string(d) + ", state has dim " + std::to_string(rho.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const PlanComponent& c : plan.components) {
    if (c.weight == 0.0) continue;
    out += c.weight * (c.unitary * rho.matrix() * c.unitary.adjoint());
  }
  return DensityMatrix::make(hermitian_part(out));
}

TransformPlan fixed_coherence_plan(double a1, double a2, double alpha) {
  constexpr double tol = 1e-12;
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) raise(ErrorKind::InvalidState, "alpha must be >= 0", alpha);
  for (double a : {a1, a2}) {
    if (!(a >= 0.0 && a <= 1.0)) raise(ErrorKind::InvalidState, "diagonal entry outside [0, 1]", a);
    const double slack = a * (1.0 - a) - alpha * alpha;
    if (slack < -tol) raise(ErrorKind::InvalidState, "a(1-a) < alpha^2", slack);
  }

  double p = 1.0;
  if (std::abs(a1 - a2) > tol) {
    if (std::abs(1.0 - 2.0 * a1) <= tol) {
      raise(ErrorKind::Degenerate, "a1 = 1/2 admits no two-unitary plan to a2 != 1/2", a1);
    }
    const bool rising = (1.0 - a1) >= a2 - tol && a2 >= a1 - tol;
    const bool falling = (1.0 - a1) <= a2 + tol && a2 <= a1 + tol;
    if (!rising && !falling) {
      raise(ErrorKind::OrderingViolated,
            "need (1-a1) >= a2 >= a1 or (1-a1) <= a2 <= a1; try the reverse direction");
    }
    p = std::clamp((1.0 - a1 - a2) / (1.0 - 2.0 * a1), 0.0, 1.0);
  }

  TransformPlan plan;
  plan.kind = PlanKind::MixedUnitary;
  plan.components = {{p, ComplexMatrix::Identity(2, 2)}, {1.0 - p, pauli_x()}};
  const DensityMatrix source = DensityMatrix::make(fixed_coherence_qubit(a1, alpha));
  const DensityMatrix out = apply_plan(plan, source);
  plan.residual = max_abs(out.matrix() - fixed_coherence_qubit(a2, alpha));
  return plan;
}

TransformPlan fixed_mixedness_similarity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1, rho2);
  const EigenDecomposition e1 = hermitian_eig(rho1.matrix());
  const EigenDecomposition e2 = hermitian_eig(rho2.matrix());
  const RealVector l1 = descending(e1.eigenvalues);
  const RealVector l2 = descending(e2.eigenvalues);
  const ComplexMatrix v1 = e1.eigenvectors.rowwise().reverse();
  const ComplexMatrix v2 = e2.eigenvectors.rowwise().reverse();

  const double mismatch = (l1 - l2).lpNorm<Eigen::Infinity>();
  if (mismatch > kSpectraTol) raise(ErrorKind::SpectraMismatch, "spectra differ", mismatch);

  // Within each group of (near-)equal eigenvalues the pairing is free up to a
  // unitary W; pick the W maximizing Re Tr(S), i.e. S closest to identity.
  const Eigen::Index d = l1.size();
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  bool degenerate = false;
  Eigen::Index begin = 0;
  while (begin < d) {
    Eigen::Index end = begin + 1;
    while (end < d && (l1(end - 1) - l1(end) <= kSpectraTol || l2(end - 1) - l2(end) <= kSpectraTol)) ++end;
    const Eigen::Index size = end - begin;
    degenerate = degenerate || size > 1;
    const ComplexMatrix b1 = v1.middleCols(begin, size);
    const ComplexMatrix b2 = v2.middleCols(begin, size);
    const ComplexMatrix overlap = b1.adjoint() * b2;
    Eigen::JacobiSVD<ComplexMatrix> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const ComplexMatrix w = svd.matrixV() * svd.matrixU().adjoint();
    s += b2 * w * b1.adjoint();
    begin = end;
  }

  TransformPlan plan;
  plan.kind = PlanKind::Similarity;
  plan.components = {{1.0, s}};
  plan.residual = max_abs(s * rho1.matrix() * s.adjoint() - rho2.matrix());
  if (degenerate && plan.residual > kSimilarityResidualTol) {
    raise(ErrorKind::DegenerateSpectrum, "eigenvalue pairing inside degenerate blocks failed", plan.residual);
  }
  return plan;
}

}  // namespace cohmix
