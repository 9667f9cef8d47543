#pragma once

#include <memory>
#include <vector>

#include "cohmix/linalg.hpp"
#include "cohmix/state.hpp"

namespace cohmix {

inline constexpr int kMaxDim = 64;

/// Generalized Gell-Mann generators of SU(d), ordered
///   u_12 .. u_(d-1)d, v_12 .. v_(d-1)d, w_1 .. w_(d-1)
/// with (j, k) pairs in lexicographic order. Each is Hermitian, traceless and
/// Tr(L_i L_j) = 2 delta_ij.
struct GeneratorSet {
  int dim = 0;
  std::vector<ComplexMatrix> generators;

  /// (d^2 - d) / 2, the number of off-diagonal pairs.
  int pair_count() const noexcept { return dim * (dim - 1) / 2; }
  /// Row/column of off-diagonal pair `index` (0-based, lexicographic).
  std::pair<int, int> pair(int index) const;
};

/// Memoized per dimension; safe to call from concurrent threads.
/// Throws DimensionTooSmall for d < 2 and ParamOutOfRange for d > kMaxDim.
std::shared_ptr<const GeneratorSet> generator_set(int d);

/// Real coordinates x_i = Tr(rho L_i). Not required to describe a PSD matrix:
/// the optimizer and tests explore points outside the state space.
struct BlochVector {
  int dim = 0;
  RealVector x;

  /// ||x||^2 <= 2(d-1)/d + 1e-9, the image of Tr(rho^2) <= 1.
  bool within_purity_bound() const;
};

/// Builds a BlochVector of dimension d, checking that x has d^2 - 1 entries.
/// Throws LengthMismatch.
BlochVector make_bloch(int d, RealVector x);

BlochVector to_bloch(const DensityMatrix& rho);

/// I/d + (1/2) sum x_i L_i. Hermitian with unit trace but NOT necessarily
/// PSD; validate (is_psd_by_charpoly / make_state) before use as a state.
ComplexMatrix from_bloch(const BlochVector& x);

/// sum_i sqrt(x_i^2 + x_{i+D/2}^2) over the (d^2-d)/2 off-diagonal pairs.
double l1_coherence_bloch(const BlochVector& x);

/// 1 - d / (2(d-1)) ||x||^2. Throws ParamOutOfRange outside the purity bound.
double mixedness_bloch(const BlochVector& x);

}  // namespace cohmix
