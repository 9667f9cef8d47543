#include <algorithm>
#include <cmath>

#include "cohmix/cli/commands.hpp"
#include "cohmix/error.hpp"
#include "cohmix/mcms.hpp"
#include "cohmix/measures.hpp"
#include "cohmix/optimizer.hpp"
#include "cohmix/sampler.hpp"

namespace cohmix::cli {

using nlohmann::json;

namespace {

// Every check reports a non-negative violation magnitude; it passes when that
// magnitude stays within the tolerance.
struct Check {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  std::int64_t samples = 0;
  json extra = json::object();

  void observe(double violation) {
    worst = std::max(worst, violation);
    ++samples;
  }
  bool passed() const { return worst <= tolerance; }

  json to_json() const {
    json j = {{"name", name},
              {"passed", passed()},
              {"worst_residual", worst},
              {"tolerance", tolerance},
              {"samples", samples}};
    j.update(extra);
    return j;
  }
};

enum StreamId : std::uint64_t { kQubitStream = 1, kTradeoffStream = 2, kEntropicStream = 3, kGeometricStream = 4 };

Check mcms_grid_check(const VerifyOptions& o) {
  Check c{"mcms_grid", 0.0, 1e-12};
  for (int d : o.dims) {
    for (int k = 0; k < o.grid; ++k) {
      const double p = o.grid == 1 ? 1.0 : static_cast<double>(k) / (o.grid - 1);
      const auto rho = mcms_state(make_mcms_params(d, p));
      const double c_err = std::abs(l1_coherence(rho) - (d - 1) * p);
      const double m_err = std::abs(linear_entropy_mixedness(rho) - (1.0 - p * p));
      c.observe(std::max({complementarity_residual(rho), c_err / (d - 1), m_err}));
    }
  }
  return c;
}

Check qubit_identity_check_all(const VerifyOptions& o, const SeededRng& root) {
  Check c{"qubit_identity", 0.0, 1e-12};
  SeededRng rng = root.substream(kQubitStream);
  for (std::int64_t i = 0; i < o.samples; ++i) {
    const auto rho = ginibre_state(2, 1 + static_cast<int>(i % 2), rng);
    c.observe(qubit_identity_check(rho));
  }
  return c;
}

Check tradeoff_check(const VerifyOptions& o, const SeededRng& root) {
  Check c{"tradeoff", 0.0, kTradeoffTol};
  double min_residual = 1.0;
  for (int d : o.dims) {
    SeededRng rng = root.substream(kTradeoffStream * 1000 + static_cast<std::uint64_t>(d));
    for (std::int64_t i = 0; i < o.samples; ++i) {
      const int rank = 1 + static_cast<int>(i % d);
      const double r = tradeoff_residual(ginibre_state(d, rank, rng));
      min_residual = std::min(min_residual, r);
      c.observe(std::max(0.0, -r));
    }
  }
  c.extra["min_residual"] = min_residual;
  return c;
}

Check entropic_check(const VerifyOptions& o, const SeededRng& root) {
  Check c{"entropic", 0.0, 1e-10};
  for (int d : o.dims) {
    SeededRng rng = root.substream(kEntropicStream * 1000 + static_cast<std::uint64_t>(d));
    for (std::int64_t i = 0; i < o.samples; ++i) {
      const auto rho = ginibre_state(d, 1 + static_cast<int>(i % d), rng);
      const double identity_err = std::abs(relative_entropy_coherence(rho) + von_neumann_entropy(rho) -
                                           shannon_entropy(dephase(rho).matrix().diagonal().real()));
      c.observe(std::max(identity_err, -entropic_tradeoff_residual(rho)));
    }
    for (int k = 0; k < o.grid; ++k) {
      const double p = o.grid == 1 ? 1.0 : static_cast<double>(k) / (o.grid - 1);
      c.observe(std::abs(entropic_tradeoff_residual(mcms_state(make_mcms_params(d, p)))));
    }
  }
  return c;
}

Check geometric_check(const VerifyOptions& o, const SeededRng& root) {
  Check c{"geometric", 0.0, 1e-10};
  SeededRng rng = root.substream(kGeometricStream);
  for (std::int64_t i = 0; i < o.samples; ++i) {
    const auto rho = ginibre_state(2, 1 + static_cast<int>(i % 2), rng);
    c.observe(std::max(0.0, geometric_coherence_qubit(rho) + geometric_mixedness(rho) - 1.0));
  }
  // a = 1/2 family [[1/2, c], [c*, 1/2]] saturates C_g + M_g = 1.
  for (int k = 0; k < o.grid; ++k) {
    const double mod = o.grid == 1 ? 0.5 : 0.5 * k / (o.grid - 1);
    const double phase = 0.37 * k;
    ComplexMatrix m(2, 2);
    m << 0.5, std::polar(mod, phase), std::polar(mod, -phase), 0.5;
    const auto rho = make_state(m);
    c.observe(std::abs(geometric_coherence_qubit(rho) + geometric_mixedness(rho) - 1.0));
  }
  return c;
}

Check optimizer_check(const VerifyOptions& o, bool& converged) {
  Check c{"optimizer", 0.0, 1e-3};
  OptimizerConfig cfg;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.restarts = o.restarts;
  cfg.max_iterations = o.max_iterations;
  json runs = json::array();
  for (int d : o.dims) {
    const auto opt = max_coherence_at_mixedness(d, o.mixedness, cfg);
    const double expected = (d - 1) * std::sqrt(1.0 - o.mixedness);
    const double rel = expected > 0 ? std::abs(opt.objective - expected) / expected : std::abs(opt.objective);
    const auto st = stationarity_check(to_bloch(opt.state));
    converged = converged && opt.converged;
    c.observe(rel);
    runs.push_back({{"dim", d},
                    {"objective", opt.objective},
                    {"expected", expected},
                    {"relative_error", rel},
                    {"constraint_violation", opt.constraint_violation},
                    {"converged", opt.converged},
                    {"stationary", is_stationary(st)},
                    {"max_radius_spread", st.max_radius_spread},
                    {"max_w", st.max_w}});
  }
  c.extra["mixedness"] = o.mixedness;
  c.extra["runs"] = std::move(runs);
  return c;
}

}  // namespace

VerifyResult run_verify(VerifyOptions o) {
  if (o.dims.empty()) raise(ErrorKind::ParamOutOfRange, "verify needs at least one dimension");
  for (int d : o.dims) {
    if (d < 2 || d > kMaxDim) raise(ErrorKind::ParamOutOfRange, "dimension out of range", d);
  }
  if (o.samples < 1) raise(ErrorKind::ParamOutOfRange, "--n must be at least 1", static_cast<double>(o.samples));
  if (o.grid < 1) raise(ErrorKind::ParamOutOfRange, "--grid must be at least 1", o.grid);

  const bool any = o.mcms_grid || o.qubit_identity || o.tradeoff || o.entropic || o.geometric || o.optimize;
  if (!any) o.mcms_grid = o.qubit_identity = o.tradeoff = o.entropic = o.geometric = true;

  const SeededRng root(o.seed);
  std::vector<Check> checks;
  VerifyResult result;
  if (o.mcms_grid) checks.push_back(mcms_grid_check(o));
  if (o.qubit_identity) checks.push_back(qubit_identity_check_all(o, root));
  if (o.tradeoff) checks.push_back(tradeoff_check(o, root));
  if (o.entropic) checks.push_back(entropic_check(o, root));
  if (o.geometric) checks.push_back(geometric_check(o, root));
  if (o.optimize) checks.push_back(optimizer_check(o, result.optimizer_converged));

  json list = json::array();
  for (const auto& c : checks) {
    result.all_passed = result.all_passed && c.passed();
    list.push_back(c.to_json());
  }
  result.verdict = {{"passed", result.all_passed && result.optimizer_converged},
                    {"dims", o.dims},
                    {"seed", o.seed},
                    {"checks", std::move(list)}};
  return result;
}

}  // namespace cohmix::cli
