#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liepair/json_io.hpp"

namespace liepair {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kCheckFailure = 1, kParseError = 2, kValidationError = 3 };

struct CheckResult {
  std::string name;
  /// "pass", "fail" or "skipped"; fail entries carry a residual or witness in detail.
  std::string status;
  Json detail;
};

struct RunReport {
  std::vector<std::string> command;
  /// sha256 of the input file, empty when there is none.
  std::string input_digest;
  std::vector<CheckResult> checks;
  Json data = Json::object();
  /// Wall time; never part of stdout.
  double timing_ms = 0;

  bool ok() const;
};

/// Runs one invocation (arguments without the program name). Reports go to
/// out, diagnostics and timing to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liepair
