#include "cohmix/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cohmix/error.hpp"
#include "cohmix/io.hpp"
#include "cohmix/mcms.hpp"
#include "cohmix/measures.hpp"
#include "cohmix/sampler.hpp"
#include "cohmix/transforms.hpp"

namespace cohmix::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError:
      return kExitIo;
    case ErrorKind::NotConverged:
    case ErrorKind::OptimizerFailed:
      return kExitNotConverged;
    default:
      return kExitValidation;
  }
}

void write_file(const fs::path& path, const std::string& payload) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) raise(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  f << payload;
  f.flush();
  if (!f) raise(ErrorKind::IoError, "failed writing " + path.string());
}

// Payload goes to --out when given, stdout otherwise.
void emit(CommandOutcome& outcome, const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    outcome.out += payload;
  } else {
    write_file(out_path, payload);
  }
}

std::string dump(const json& j) { return j.dump() + "\n"; }

struct MeasureArgs {
  std::string file;
  std::string out;
  bool geometric = false;
  std::uint64_t seed = 0;
};

struct McmsArgs {
  int dim = 2;
  std::optional<double> p;
  std::optional<double> mixedness;
  std::string out;
};

struct ScanArgs {
  int dim = 2;
  std::int64_t n = 1;
  std::uint64_t seed = 0;
  int rank = 0;
  int threads = 1;
  std::string out;
};

struct FixedCoherenceArgs {
  double a1 = 0.0;
  double a2 = 0.0;
  double alpha = 0.0;
  bool apply = false;
  std::string out;
};

struct FixedMixednessArgs {
  std::string rho1;
  std::string rho2;
  bool apply = false;
  std::string out;
};

void cmd_measure(const MeasureArgs& a, CommandOutcome& outcome) {
  const auto rho = io::read_state_file(a.file);
  std::optional<OptimizerConfig> numeric;
  if (a.geometric && rho.dim() > 2) {
    numeric.emplace();
    numeric->seed = a.seed;
  }
  emit(outcome, a.out, dump(io::report_to_json(measure_report(rho, numeric))));
}

void cmd_mcms(const McmsArgs& a, CommandOutcome& outcome) {
  if (!a.p && !a.mixedness) raise(ErrorKind::ParamOutOfRange, "mcms needs --p or --mixedness");
  const McmsParams params = a.p ? make_mcms_params(a.dim, *a.p) : mcms_from_mixedness(a.dim, *a.mixedness);
  emit(outcome, a.out, dump(io::state_to_json(mcms_state(params))));
}

void cmd_scan(const ScanArgs& a, CommandOutcome& outcome) {
  ScanOptions opts;
  opts.dim = a.dim;
  opts.samples = a.n;
  opts.rank = a.rank;
  opts.seed = a.seed;
  opts.threads = a.threads;
  const auto points = scan(opts);
  const auto summary = summarize(points);

  std::ostringstream csv;
  write_scan_csv(csv, points);

  json report = {{"dim", a.dim},
                 {"samples", a.n},
                 {"rank", a.rank == 0 ? a.dim : a.rank},
                 {"seed", a.seed},
                 {"count", summary.count},
                 {"violations", summary.violations},
                 {"min_residual", summary.min_residual},
                 {"max_violation", std::max(0.0, -summary.min_residual)}};

  if (a.out.empty()) {
    outcome.out += csv.str();
    outcome.err += report.dump() + "\n";
    return;
  }
  const fs::path points_path(a.out);
  const fs::path parabola_path = points_path.parent_path() / "parabola.csv";
  std::ostringstream parabola;
  write_parabola_csv(parabola);
  write_file(points_path, csv.str());
  write_file(parabola_path, parabola.str());
  report["points_csv"] = points_path.string();
  report["parabola_csv"] = parabola_path.string();
  outcome.out += dump(report);
}

json plan_payload(const TransformPlan& plan, const std::optional<DensityMatrix>& transformed) {
  if (!transformed) return io::plan_to_json(plan);
  return {{"plan", io::plan_to_json(plan)}, {"transformed_state", io::state_to_json(*transformed)}};
}

void cmd_fixed_coherence(const FixedCoherenceArgs& a, CommandOutcome& outcome) {
  const auto plan = fixed_coherence_plan(a.a1, a.a2, a.alpha);
  std::optional<DensityMatrix> transformed;
  if (a.apply) transformed = apply_plan(plan, make_state(fixed_coherence_qubit(a.a1, a.alpha)));
  emit(outcome, a.out, dump(plan_payload(plan, transformed)));
}

void cmd_fixed_mixedness(const FixedMixednessArgs& a, CommandOutcome& outcome) {
  const auto rho1 = io::read_state_file(a.rho1);
  const auto rho2 = io::read_state_file(a.rho2);
  const auto plan = fixed_mixedness_similarity(rho1, rho2);
  std::optional<DensityMatrix> transformed;
  if (a.apply) transformed = apply_plan(plan, rho1);
  emit(outcome, a.out, dump(plan_payload(plan, transformed)));
}

void cmd_verify(const VerifyOptions& o, const std::string& out, CommandOutcome& outcome) {
  const auto result = run_verify(o);
  emit(outcome, out, dump(result.verdict));
  if (!result.optimizer_converged) {
    outcome.err += "NotConverged: optimizer did not converge\n";
    outcome.exit_code = kExitNotConverged;
  } else if (!result.all_passed) {
    for (const auto& c : result.verdict["checks"]) {
      if (!c["passed"].get<bool>()) outcome.err += "check failed: " + c["name"].get<std::string>() + "\n";
    }
    outcome.exit_code = kExitValidation;
  }
}

}  // namespace

CommandOutcome run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Coherence and mixedness of finite-dimensional quantum states", "cohmix"};
  app.require_subcommand(1);

  MeasureArgs measure;
  auto* measure_cmd = app.add_subcommand("measure", "Print every coherence and mixedness measure of a state file");
  measure_cmd->add_option("file", measure.file, "State JSON file")->required();
  measure_cmd->add_flag("--geometric", measure.geometric, "Numeric geometric coherence for d > 2");
  measure_cmd->add_option("--seed", measure.seed, "Seed for the numeric geometric coherence");
  measure_cmd->add_option("--out", measure.out, "Write the report here instead of stdout");

  McmsArgs mcms;
  auto* mcms_cmd = app.add_subcommand("mcms", "Emit a maximally coherent mixed state");
  mcms_cmd->add_option("--dim", mcms.dim, "Dimension")->required();
  auto* p_opt = mcms_cmd->add_option("--p", mcms.p, "Weight of the maximally coherent pure state");
  auto* m_opt = mcms_cmd->add_option("--mixedness", mcms.mixedness, "Target linear-entropy mixedness");
  p_opt->excludes(m_opt);
  mcms_cmd->add_option("--out", mcms.out, "Write the state here instead of stdout");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Sample random states onto the coherence-mixedness plane");
  scan_cmd->add_option("--dim", scan_args.dim, "Dimension")->capture_default_str();
  scan_cmd->add_option("--n", scan_args.n, "Number of samples")->required();
  scan_cmd->add_option("--seed", scan_args.seed, "RNG seed")->capture_default_str();
  scan_cmd->add_option("--rank", scan_args.rank, "Ginibre rank, 0 for full rank")->capture_default_str();
  scan_cmd->add_option("--threads", scan_args.threads, "Worker threads")->capture_default_str();
  scan_cmd->add_option("--out", scan_args.out, "Points CSV path; parabola.csv is written next to it");

  VerifyOptions verify;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite and print a JSON verdict");
  verify_cmd->add_option("--dim", verify.dims, "Dimensions, comma separated or repeated")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_option("--n", verify.samples, "Random states per dimension")->capture_default_str();
  verify_cmd->add_option("--grid", verify.grid, "MCMS grid points in p")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "Optimizer threads")->capture_default_str();
  verify_cmd->add_option("--mixedness", verify.mixedness, "Constraint for --optimize")->capture_default_str();
  verify_cmd->add_option("--restarts", verify.restarts, "Optimizer restarts")->capture_default_str();
  verify_cmd->add_option("--max-iterations", verify.max_iterations, "Optimizer iterations per penalty stage")
      ->capture_default_str();
  verify_cmd->add_flag("--mcms-grid", verify.mcms_grid, "MCMS complementarity grid");
  verify_cmd->add_flag("--qubit-identity", verify.qubit_identity, "Qubit identity on random qubits");
  verify_cmd->add_flag("--tradeoff", verify.tradeoff, "Trade-off bound on random states");
  verify_cmd->add_flag("--entropic", verify.entropic, "Entropic identity and bound");
  verify_cmd->add_flag("--geometric", verify.geometric, "Geometric complementarity on qubits");
  verify_cmd->add_flag("--optimize", verify.optimize, "Optimizer cross-check against the closed form");
  verify_cmd->add_option("--out", verify_out, "Write the verdict here instead of stdout");

  auto* transform_cmd = app.add_subcommand("transform", "Synthesize state transformations");
  transform_cmd->require_subcommand(1);

  FixedCoherenceArgs fc;
  auto* fc_cmd = transform_cmd->add_subcommand("fixed-coherence", "Qubit map at constant l1 coherence");
  fc_cmd->add_option("--a1", fc.a1, "Source population")->required();
  fc_cmd->add_option("--a2", fc.a2, "Target population")->required();
  fc_cmd->add_option("--alpha", fc.alpha, "Real off-diagonal entry")->required();
  fc_cmd->add_flag("--apply", fc.apply, "Also emit the transformed state");
  fc_cmd->add_option("--out", fc.out, "Write the plan here instead of stdout");

  FixedMixednessArgs fm;
  auto* fm_cmd = transform_cmd->add_subcommand("fixed-mixedness", "Unitary between isospectral states");
  fm_cmd->add_option("--rho1", fm.rho1, "Source state file")->required();
  fm_cmd->add_option("--rho2", fm.rho2, "Target state file")->required();
  fm_cmd->add_flag("--apply", fm.apply, "Also emit the transformed state");
  fm_cmd->add_option("--out", fm.out, "Write the plan here instead of stdout");

  CommandOutcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    outcome.out = out.str();
    outcome.err = err.str();
    outcome.exit_code = code == 0 ? kExitOk : kExitValidation;
    return outcome;
  }

  try {
    if (*measure_cmd) {
      cmd_measure(measure, outcome);
    } else if (*mcms_cmd) {
      cmd_mcms(mcms, outcome);
    } else if (*scan_cmd) {
      cmd_scan(scan_args, outcome);
    } else if (*verify_cmd) {
      cmd_verify(verify, verify_out, outcome);
    } else if (*fc_cmd) {
      cmd_fixed_coherence(fc, outcome);
    } else if (*fm_cmd) {
      cmd_fixed_mixedness(fm, outcome);
    }
  } catch (const Error& e) {
    outcome.out.clear();
    outcome.err += std::string(e.what()) + "\n";
    outcome.exit_code = exit_code_for(e.kind());
  } catch (const std::exception& e) {
    outcome.out.clear();
    outcome.err += std::string("error: ") + e.what() + "\n";
    outcome.exit_code = kExitValidation;
  }
  return outcome;
}

}  // namespace cohmix::cli
