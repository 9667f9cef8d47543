#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohmix/optimizer.hpp"

namespace cohmix::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitNotConverged = 2,
  kExitIo = 3,
};

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string out;  // payload destined for stdout
  std::string err;  // diagnostics destined for stderr
};

/// Runs one invocation; `args` excludes the program name. Never throws.
CommandOutcome run_cli(const std::vector<std::string>& args);

struct VerifyOptions {
  std::vector<int> dims{2, 3, 4, 5};
  std::int64_t samples = 2000;
  int grid = 101;
  std::uint64_t seed = 0;
  int threads = 1;
  double mixedness = 0.5;
  int restarts = OptimizerConfig{}.restarts;
  int max_iterations = OptimizerConfig{}.max_iterations;

  bool mcms_grid = false;
  bool qubit_identity = false;
  bool tradeoff = false;
  bool entropic = false;
  bool geometric = false;
  bool optimize = false;
};

struct VerifyResult {
  nlohmann::json verdict;
  bool all_passed = true;
  bool optimizer_converged = true;
};

/// With no check selected, runs every check except the optimizer one.
VerifyResult run_verify(VerifyOptions options);

}  // namespace cohmix::cli
