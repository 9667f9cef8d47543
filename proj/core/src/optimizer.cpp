#include "cohmix/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "cohmix/error.hpp"
#include "cohmix/measures.hpp"
#include "cohmix/sampler.hpp"

namespace cohmix {

void OptimizerConfig::validate() const {
  if (restarts < 1) raise(ErrorKind::ParamOutOfRange, "restarts must be >= 1", restarts);
  if (max_iterations < 1) raise(ErrorKind::ParamOutOfRange, "max_iterations must be >= 1", max_iterations);
  if (!(step_size > 0.0)) raise(ErrorKind::ParamOutOfRange, "step_size must be positive", step_size);
  if (!(penalty_weight > 0.0)) raise(ErrorKind::ParamOutOfRange, "penalty_weight must be positive", penalty_weight);
  if (!(tolerance > 0.0 && tolerance <= 1e-4)) {
    raise(ErrorKind::ParamOutOfRange, "tolerance must lie in (0, 1e-4]", tolerance);
  }
  if (threads < 1) raise(ErrorKind::ParamOutOfRange, "threads must be >= 1", threads);
}

RealVector project_to_simplex(const RealVector& v) {
  const Eigen::Index n = v.size();
  std::vector<double> sorted(v.data(), v.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).cwiseMax(0.0).matrix();
}

namespace {

// Runs `task(i)` for i in [0, count) on up to `threads` workers.
void run_indexed(int count, int threads, const std::function<void(int)>& task) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) task(i);
    });
  }
}

// ---------------------------------------------------------------------------
// Fixed-mixedness coherence maximization.

constexpr double kFiniteDifferenceStep = 1e-6;
constexpr double kArmijo = 1e-4;
constexpr int kPenaltyStages = 3;
// The finite-difference gradient of the penalized objective bottoms out well
// above cfg.tolerance for large weights, so an ascent also counts as converged
// once kStallWindow consecutive iterations gain less than
// cfg.tolerance * (1 + |f|) in total.
constexpr int kStallWindow = 20;

// rho = L L^dagger / Tr(L L^dagger); parameters interleave Re/Im of L row-major.
ComplexMatrix factor_from_params(const RealVector& theta, int d) {
  ComplexMatrix l(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const Eigen::Index k = 2 * (static_cast<Eigen::Index>(r) * d + c);
      l(r, c) = Complex{theta(k), theta(k + 1)};
    }
  return l;
}

ComplexMatrix state_from_params(const RealVector& theta, int d) {
  const ComplexMatrix l = factor_from_params(theta, d);
  ComplexMatrix rho = l * l.adjoint();
  rho /= rho.trace().real();
  return hermitian_part(rho);
}

struct PenaltyObjective {
  int d;
  double m_f;
  double weight;

  double coherence(const ComplexMatrix& rho) const {
    double c = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) c += std::abs(rho(i, j));
    return c;
  }

  double mixedness(const ComplexMatrix& rho) const {
    return d / (d - 1.0) * (1.0 - rho.squaredNorm());
  }

  double operator()(const RealVector& theta) const {
    const ComplexMatrix rho = state_from_params(theta, d);
    const double gap = mixedness(rho) - m_f;
    return coherence(rho) - weight * gap * gap;
  }

  RealVector gradient(const RealVector& theta) const {
    RealVector g(theta.size());
    RealVector probe = theta;
    for (Eigen::Index k = 0; k < theta.size(); ++k) {
      const double saved = probe(k);
      probe(k) = saved + kFiniteDifferenceStep;
      const double up = (*this)(probe);
      probe(k) = saved - kFiniteDifferenceStep;
      const double down = (*this)(probe);
      probe(k) = saved;
      g(k) = (up - down) / (2.0 * kFiniteDifferenceStep);
    }
    return g;
  }
};

struct AscentResult {
  RealVector theta;
  double value = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// BFGS ascent with Armijo backtracking. The objective is invariant under
// rescaling L, so iterates are renormalized to unit Frobenius norm; accepted
// steps never decrease the objective.
AscentResult bfgs_ascent(const PenaltyObjective& f, RealVector theta, const OptimizerConfig& cfg) {
  const Eigen::Index n = theta.size();
  theta.normalize();
  double value = f(theta);
  RealVector grad = f.gradient(theta);
  Eigen::MatrixXd inv_hessian = Eigen::MatrixXd::Identity(n, n);

  AscentResult result;
  std::vector<double> history(kStallWindow, value);
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    if (grad.lpNorm<Eigen::Infinity>() <= cfg.tolerance) {
      result.converged = true;
      break;
    }
    RealVector direction = inv_hessian * grad;
    double slope = grad.dot(direction);
    if (!(slope > 0.0)) {
      inv_hessian.setIdentity();
      direction = grad;
      slope = grad.squaredNorm();
    }

    double step = cfg.step_size;
    RealVector candidate;
    double candidate_value = value;
    bool accepted = false;
    while (step > 1e-16) {
      candidate = (theta + step * direction).normalized();
      candidate_value = f(candidate);
      if (candidate_value >= value + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!inv_hessian.isIdentity()) {
        inv_hessian.setIdentity();
        continue;
      }
      // No ascent possible along the gradient at machine precision: the
      // finite-difference gradient is at its noise floor.
      result.converged = grad.lpNorm<Eigen::Infinity>() <= 100.0 * cfg.tolerance;
      break;
    }

    const RealVector new_grad = f.gradient(candidate);
    // Minimizing -f: s = step taken, y = change in the gradient of -f.
    const RealVector s = candidate - theta;
    const RealVector y = grad - new_grad;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
      inv_hessian = (eye - rho * s * y.transpose()) * inv_hessian * (eye - rho * y * s.transpose()) +
                    rho * s * s.transpose();
    }
    theta = candidate;
    value = candidate_value;
    grad = new_grad;
    double& window_start = history[static_cast<std::size_t>(it % kStallWindow)];
    if (it + 1 >= kStallWindow && value - window_start <= cfg.tolerance * (1.0 + std::abs(value))) {
      result.converged = true;
      ++it;
      break;
    }
    window_start = value;
  }
  result.theta = std::move(theta);
  result.value = value;
  result.gradient_norm = grad.lpNorm<Eigen::Infinity>();
  result.iterations = it;
  return result;
}

struct RestartOutcome {
  std::optional<DensityMatrix> state;
  double objective = -std::numeric_limits<double>::infinity();
  double violation = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

// Moves rho radially in Bloch space (towards or away from I/d) so that
// M_l = m_f exactly; the constraint set is a sphere around I/d.
std::optional<DensityMatrix> project_onto_mixedness(const ComplexMatrix& rho, int d, double m_f) {
  const ComplexMatrix centered = rho - ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  const double norm2 = centered.squaredNorm();  // = ||x||^2 / 2
  const double target = (d - 1.0) / d * (1.0 - m_f);
  if (norm2 <= 0.0) return std::nullopt;
  const double scale = std::sqrt(target / norm2);
  try {
    return DensityMatrix::make(hermitian_part(ComplexMatrix::Identity(d, d) / static_cast<double>(d) +
                                              scale * centered));
  } catch (const Error&) {
    return std::nullopt;
  }
}

RestartOutcome run_restart(int d, double m_f, const OptimizerConfig& cfg, int index) {
  SeededRng rng = SeededRng(cfg.seed).substream(static_cast<std::uint64_t>(index));
  RealVector theta(2 * d * d);
  for (Eigen::Index k = 0; k < theta.size(); ++k) theta(k) = rng.normal();

  RestartOutcome out;
  AscentResult ascent;
  for (int stage = 0; stage < kPenaltyStages; ++stage) {
    const double weight = cfg.penalty_weight * std::pow(1e-2, kPenaltyStages - 1 - stage);
    const PenaltyObjective f{d, m_f, weight};
    ascent = bfgs_ascent(f, std::move(theta), cfg);
    theta = ascent.theta;
    out.iterations += ascent.iterations;
  }

  const ComplexMatrix raw = state_from_params(theta, d);
  std::optional<DensityMatrix> projected = project_onto_mixedness(raw, d, m_f);
  if (!projected) {
    try {
      projected = DensityMatrix::make(raw);
    } catch (const Error&) {
      return out;
    }
  }
  out.objective = l1_coherence(*projected);
  out.violation = std::abs(linear_entropy_mixedness(*projected) - m_f);
  out.converged = ascent.converged && out.violation <= 1e-6;
  out.state = std::move(projected);
  return out;
}

}  // namespace

Optimum max_coherence_at_mixedness(int d, double m_f, const OptimizerConfig& cfg) {
  cfg.validate();
  if (d < 2) raise(ErrorKind::DimensionTooSmall, "optimizer needs d >= 2", d);
  if (d > kMaxDim) raise(ErrorKind::ParamOutOfRange, "dimension too large", d);
  if (!(m_f >= 0.0 && m_f <= 1.0)) raise(ErrorKind::ParamOutOfRange, "mixedness must lie in [0, 1]", m_f);
  if (m_f == 1.0) return {maximally_mixed(d), 0.0, 0.0, 0, true};

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  run_indexed(cfg.restarts, cfg.threads,
              [&](int i) { outcomes[static_cast<std::size_t>(i)] = run_restart(d, m_f, cfg, i); });

  // Deterministic reduction: converged first, then larger objective, then
  // lower restart index.
  const RestartOutcome* best = nullptr;
  for (const RestartOutcome& o : outcomes) {
    if (!o.state) continue;
    if (best == nullptr || (o.converged && !best->converged) ||
        (o.converged == best->converged && o.objective > best->objective)) {
      best = &o;
    }
  }
  if (best == nullptr) {
    return {maximally_mixed(d), 0.0, std::abs(1.0 - m_f), 0, false};
  }
  return {*best->state, best->objective, best->violation, best->iterations, best->converged};
}

StationarityReport stationarity_check(const BlochVector& x) {
  const Eigen::Index expected = static_cast<Eigen::Index>(x.dim) * x.dim - 1;
  if (x.dim < 2 || x.x.size() != expected) raise(ErrorKind::LengthMismatch, "invalid Bloch vector");
  const int half = x.dim * (x.dim - 1) / 2;
  StationarityReport r;
  r.pair_radii.reserve(static_cast<std::size_t>(half));
  for (int i = 0; i < half; ++i) r.pair_radii.push_back(std::hypot(x.x(i), x.x(i + half)));
  for (Eigen::Index i = 2 * half; i < x.x.size(); ++i) r.w_components.push_back(x.x(i));

  const auto [lo, hi] = std::minmax_element(r.pair_radii.begin(), r.pair_radii.end());
  r.max_radius_spread = *hi - *lo;
  for (double w : r.w_components) r.max_w = std::max(r.max_w, std::abs(w));
  return r;
}

// ---------------------------------------------------------------------------
// Fidelity to incoherent states.

namespace {

// Eigenvalues of rho below this are treated as zero when restricting to its
// support.
constexpr double kSupportTol = 1e-14;
constexpr double kStationaryTol = 1e-10;
constexpr double kEigenvalueFloor = 1e-20;

// sqrt F(rho, diag(q)) = Tr sqrt(K diag(q) K^dagger) with K = Lambda^{1/2} V^dagger
// over the support of rho. The inner matrix is linear in q and has no spurious
// round-off eigenvalues from the kernel of rho, so the gradient is analytic.
class RootFidelity {
 public:
  explicit RootFidelity(const ComplexMatrix& rho) {
    const EigenDecomposition e = hermitian_eig(rho);
    const double cutoff = kSupportTol * std::max(1.0, e.eigenvalues.maxCoeff());
    std::vector<Eigen::Index> support;
    for (Eigen::Index k = 0; k < e.eigenvalues.size(); ++k)
      if (e.eigenvalues(k) > cutoff) support.push_back(k);
    factor_.resize(static_cast<Eigen::Index>(support.size()), rho.rows());
    for (std::size_t r = 0; r < support.size(); ++r) {
      const Eigen::Index k = support[r];
      factor_.row(static_cast<Eigen::Index>(r)) = std::sqrt(e.eigenvalues(k)) * e.eigenvectors.col(k).adjoint();
    }
  }

  // Sum of singular values of K diag(sqrt(q)).
  double value(const RealVector& q) const {
    const ComplexMatrix scaled = factor_ * q.cwiseMax(0.0).cwiseSqrt().cast<Complex>().asDiagonal();
    return Eigen::JacobiSVD<ComplexMatrix>(scaled).singularValues().sum();
  }

  // d/dq_i Tr sqrt(M) = (1/2) sum_k |<u_k|K e_i>|^2 / sqrt(lambda_k).
  RealVector gradient(const RealVector& q) const {
    const Solver solver(inner(q), Eigen::ComputeEigenvectors);
    const ComplexMatrix w = solver.eigenvectors().adjoint() * factor_;
    RealVector g = RealVector::Zero(q.size());
    for (Eigen::Index k = 0; k < w.rows(); ++k) {
      // The derivative diverges on faces where q kills part of the support;
      // the floor keeps it finite so the line search can leave the face.
      const double root = std::sqrt(std::max(solver.eigenvalues()(k), kEigenvalueFloor));
      g += (0.5 / root) * w.row(k).cwiseAbs2().transpose();
    }
    return g;
  }

 private:
  using Solver = Eigen::SelfAdjointEigenSolver<ComplexMatrix>;

  ComplexMatrix inner(const RealVector& q) const {
    return hermitian_part(factor_ * q.cwiseMax(0.0).cast<Complex>().asDiagonal() * factor_.adjoint());
  }

  ComplexMatrix factor_;
};

struct SimplexAscent {
  RealVector q;
  double root_value = 0.0;
  bool converged = false;
};

// Projected gradient ascent with Armijo backtracking along the projection arc.
// Stationarity is measured by the projected-gradient step ||P(q + g) - q||.
SimplexAscent simplex_ascent(const RootFidelity& f, RealVector q, const OptimizerConfig& cfg) {
  q = project_to_simplex(q);
  double value = f.value(q);
  double step = cfg.step_size;
  bool converged = false;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const RealVector g = f.gradient(q);
    const RealVector unit_move = project_to_simplex(q + g / std::max(1.0, g.lpNorm<Eigen::Infinity>())) - q;
    if (unit_move.lpNorm<Eigen::Infinity>() <= kStationaryTol) {
      converged = true;
      break;
    }
    bool accepted = false;
    RealVector candidate;
    double candidate_value = value;
    while (step > 1e-18) {
      candidate = project_to_simplex(q + step * g);
      candidate_value = f.value(candidate);
      if (candidate_value >= value + kArmijo * g.dot(candidate - q)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || candidate_value <= value) {
      // No representable ascent left: stationary up to round-off in the value.
      converged = unit_move.lpNorm<Eigen::Infinity>() <= 1e-6;
      break;
    }
    q = std::move(candidate);
    value = candidate_value;
    step = std::min(step * 2.0, 1e6);
  }
  return {std::move(q), value, converged};
}

}  // namespace

IncoherentFidelity max_fidelity_incoherent(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  cfg.validate();
  const int d = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  const RootFidelity f(m);

  std::vector<RealVector> starts;
  starts.push_back(m.diagonal().real());
  starts.push_back(RealVector::Constant(d, 1.0 / d));
  SeededRng rng(cfg.seed);
  for (int r = 2; r < cfg.restarts; ++r) {
    SeededRng sub = rng.substream(static_cast<std::uint64_t>(r));
    RealVector q(d);
    std::exponential_distribution<double> exponential(1.0);
    for (int i = 0; i < d; ++i) q(i) = exponential(sub.engine());
    starts.push_back(q / q.sum());
  }
  if (static_cast<int>(starts.size()) > cfg.restarts) starts.resize(static_cast<std::size_t>(cfg.restarts));

  std::vector<SimplexAscent> results(starts.size());
  run_indexed(static_cast<int>(starts.size()), cfg.threads, [&](int i) {
    results[static_cast<std::size_t>(i)] = simplex_ascent(f, starts[static_cast<std::size_t>(i)], cfg);
  });

  const SimplexAscent* best = nullptr;
  for (const SimplexAscent& r : results) {
    if (!r.converged) continue;
    if (best == nullptr || r.root_value > best->root_value) best = &r;
  }
  if (best == nullptr) raise(ErrorKind::NotConverged, "simplex ascent did not converge in any restart");

  const double value = std::clamp(best->root_value * best->root_value, 0.0, 1.0);
  const ComplexMatrix sigma = best->q.cast<Complex>().asDiagonal();
  return {DensityMatrix::make(sigma), value, true};
}

}  // namespace cohmix
