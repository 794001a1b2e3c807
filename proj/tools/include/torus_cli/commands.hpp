#pragma once

#include <ostream>
#include <string>

#include "torus_cli/config.hpp"
#include "torus_cli/table.hpp"

namespace torus::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvariant = 2 };

struct RunResult {
  ResultTable table;
  int exit_code = kOk;
  std::string message;  // set when exit_code != kOk
};

/// Validates, dispatches and fills the table and its metadata. Does not write.
RunResult run(const ExperimentConfig& config);

/// run() plus output: CSV to stdout or atomically to config.output, diagnostics to err.
/// Library errors are mapped onto exit codes here.
int execute(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace torus::cli
