#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sections::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kCandidate = 3,  // scan found a case below its threshold; witness in the report
  kIoError = 4,
};

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses an inclusive "a..b" range; throws std::invalid_argument otherwise.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace sections::cli
