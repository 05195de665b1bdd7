#pragma once

#include <string>
#include <vector>

#include "hypertan/serialize.hpp"

namespace hypertan {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kBudgetExceeded = 3, kInternalError = 4 };

struct CommandOutput {
  json report;
  int exit_code = kOk;
  std::string svg;  ///< plot only
};

const std::vector<std::string>& command_names();

/// Runs one command. `args` holds the command-line options by long name
/// (config, curve, other, point, degree, seed, samples, field, budget_degree,
/// viewport, resolution, chart, b, d, t, manifest). Library errors propagate.
CommandOutput run_command(const std::string& command, const json& args);

/// Same, with errors turned into an error report and the matching exit code.
CommandOutput run_command_safe(const std::string& command, const json& args);

}  // namespace hypertan
