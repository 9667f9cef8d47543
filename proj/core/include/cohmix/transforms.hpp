#pragma once

#include <string_view>
#include <vector>

#include "cohmix/state.hpp"

namespace cohmix {

enum class MajorizationOrder { FirstMajorizes, SecondMajorizes, Equal, Incomparable };

std::string_view to_string(MajorizationOrder order) noexcept;

inline constexpr double kMajorizationTol = 1e-10;

/// Compares partial sums of the descending spectra. FirstMajorizes means
/// sigma < rho (rho is the less mixed of the two). Throws DimensionMismatch.
MajorizationOrder majorization_compare(const DensityMatrix& rho, const DensityMatrix& sigma);

enum class PlanKind { MixedUnitary, Similarity };

std::string_view to_string(PlanKind kind) noexcept;

struct PlanComponent {
  double weight = 1.0;
  ComplexMatrix unitary;
};

/// Either sum_i p_i U_i rho U_i^dagger (MixedUnitary) or a single S rho S^dagger
/// (Similarity, one component of weight 1). `residual` is the max-norm error
/// of the target reproduction measured when the plan was synthesized.
struct TransformPlan {
  PlanKind kind = PlanKind::MixedUnitary;
  std::vector<PlanComponent> components;
  double residual = 0.0;

  /// Throws ParamOutOfRange / NotUnitary when weights or unitaries are off.
  void validate() const;
};

/// [[a, alpha], [alpha, 1 - a]].
ComplexMatrix fixed_coherence_qubit(double a, double alpha);

/// Two-unitary plan {(p, I), (1 - p, sigma_x)} with p = (1-a1-a2)/(1-2 a1)
/// taking rho(a1) to rho(a2) at constant coherence 2 alpha.
/// Throws InvalidState, Degenerate (a1 = 1/2, a2 != 1/2) or OrderingViolated.
TransformPlan fixed_coherence_plan(double a1, double a2, double alpha);

/// Applies the plan and revalidates. Throws DimensionMismatch.
DensityMatrix apply_plan(const TransformPlan& plan, const DensityMatrix& rho);

inline constexpr double kSpectraTol = 1e-8;
inline constexpr double kSimilarityResidualTol = 1e-9;

/// Unitary S with S rho1 S^dagger = rho2 for isospectral states, S = V2 W V1^dagger
/// with eigenvalues paired in descending order. W is block diagonal over
/// (near-)degenerate eigenvalue groups and fixes the eigenvector gauge by
/// choosing the S closest to the identity. Throws SpectraMismatch, or
/// DegenerateSpectrum if the reproduction residual still exceeds 1e-9.
TransformPlan fixed_mixedness_similarity(const DensityMatrix& rho1, const DensityMatrix& rho2);

}  // namespace cohmix
