#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwt/experiment.hpp"

namespace qwt {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  WalkModel model;
  std::optional<int> steps;  ///< default: 3 * predicted transfer time
  Representations representations;
  OutputFormat format = OutputFormat::Csv;
  std::string out = "-";
  unsigned long seed = 0;
  bool verify = false;
  std::vector<int> sweep_n;  ///< non-empty selects sweep mode
};

/// Argument or configuration error; the CLI exits with code 2 on these.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// --help / --version were requested; what() carries the text to print.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses and validates command-line arguments (argv without the program
/// name). Unknown flags, malformed values and model-invariant violations all
/// surface as UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Full CLI entry point. Returns the process exit code: 0 success,
/// 1 runtime failure (unwritable output, failed --verify), 2 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace qwt
