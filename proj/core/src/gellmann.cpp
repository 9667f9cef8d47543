#include "cohmix/gellmann.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "cohmix/error.hpp"

namespace cohmix {

namespace {

std::shared_ptr<const GeneratorSet> build_generators(int d) {
  auto set = std::make_shared<GeneratorSet>();
  set->dim = d;
  const int pairs = d * (d - 1) / 2;
  set->generators.reserve(static_cast<std::size_t>(d * d - 1));

  std::vector<std::pair<int, int>> index_pairs;
  index_pairs.reserve(pairs);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) index_pairs.emplace_back(j, k);

  for (auto [j, k] : index_pairs) {
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    u(j, k) = 1.0;
    u(k, j) = 1.0;
    set->generators.push_back(std::move(u));
  }
  const Complex i_unit{0.0, 1.0};
  for (auto [j, k] : index_pairs) {
    ComplexMatrix v = ComplexMatrix::Zero(d, d);
    v(j, k) = -i_unit;
    v(k, j) = i_unit;
    set->generators.push_back(std::move(v));
  }
  // w_l = sqrt(2 / (l (l+1))) (sum_{j<l} |j><j| - l |l><l|), 0-based l = 1..d-1.
  for (int l = 1; l < d; ++l) {
    ComplexMatrix w = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) w(j, j) = scale;
    w(l, l) = -scale * l;
    set->generators.push_back(std::move(w));
  }
  return set;
}

}  // namespace

std::pair<int, int> GeneratorSet::pair(int index) const {
  int j = 0;
  int remaining = index;
  while (remaining >= dim - 1 - j) {
    remaining -= dim - 1 - j;
    ++j;
  }
  return {j, j + 1 + remaining};
}

std::shared_ptr<const GeneratorSet> generator_set(int d) {
  if (d < 2) raise(ErrorKind::DimensionTooSmall, "generators need d >= 2", d);
  if (d > kMaxDim) raise(ErrorKind::ParamOutOfRange, "dimension above " + std::to_string(kMaxDim), d);

  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GeneratorSet>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = build_generators(d);
  return slot;
}

bool BlochVector::within_purity_bound() const {
  return x.allFinite() && x.squaredNorm() <= 2.0 * (dim - 1) / dim + 1e-9;
}

BlochVector make_bloch(int d, RealVector x) {
  if (d < 2) raise(ErrorKind::DimensionTooSmall, "Bloch vectors need d >= 2", d);
  const Eigen::Index expected = static_cast<Eigen::Index>(d) * d - 1;
  if (x.size() != expected) {
    raise(ErrorKind::LengthMismatch, "expected " + std::to_string(expected) + " components, got " +
                                         std::to_string(x.size()));
  }
  return {d, std::move(x)};
}

namespace {

void check_length(const BlochVector& x) {
  const Eigen::Index expected = static_cast<Eigen::Index>(x.dim) * x.dim - 1;
  if (x.dim < 2 || x.x.size() != expected) {
    raise(ErrorKind::LengthMismatch, "Bloch vector of dim " + std::to_string(x.dim) + " has " +
                                         std::to_string(x.x.size()) + " components");
  }
}

}  // namespace

BlochVector to_bloch(const DensityMatrix& rho) {
  const auto set = generator_set(rho.dim());
  RealVector x(static_cast<Eigen::Index>(set->generators.size()));
  for (std::size_t i = 0; i < set->generators.size(); ++i) {
    // Tr(rho L) = sum_jk rho_jk L_kj
    x(static_cast<Eigen::Index>(i)) =
        rho.matrix().cwiseProduct(set->generators[i].transpose()).sum().real();
  }
  return {rho.dim(), std::move(x)};
}

ComplexMatrix from_bloch(const BlochVector& x) {
  check_length(x);
  const auto set = generator_set(x.dim);
  ComplexMatrix m = ComplexMatrix::Identity(x.dim, x.dim) / static_cast<double>(x.dim);
  for (std::size_t i = 0; i < set->generators.size(); ++i) {
    m += (0.5 * x.x(static_cast<Eigen::Index>(i))) * set->generators[i];
  }
  return m;
}

double l1_coherence_bloch(const BlochVector& x) {
  check_length(x);
  const int half = x.dim * (x.dim - 1) / 2;
  double c = 0.0;
  for (int i = 0; i < half; ++i) c += std::hypot(x.x(i), x.x(i + half));
  return c;
}

double mixedness_bloch(const BlochVector& x) {
  check_length(x);
  if (!x.within_purity_bound()) {
    raise(ErrorKind::ParamOutOfRange, "||x||^2 exceeds the purity bound", x.x.squaredNorm());
  }
  const double d = x.dim;
  return 1.0 - d / (2.0 * (d - 1.0)) * x.x.squaredNorm();
}

}  // namespace cohmix
