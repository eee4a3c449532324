#pragma once

#include <optional>
#include <string>
#include <vector>

namespace statikit::cli {

/// One batch invocation.
struct JobSpec {
  std::string subcommand;
  /// A file path, or inline JSON when it starts with '{'.
  std::string input;
  std::optional<std::string> output;
  bool audit = false;
  bool fail_fast = false;
  bool verbose = false;
  /// Print the input and output schemas of the subcommand instead of running it.
  bool schema = false;
};

struct JobResult {
  int exit_code = 0;
  /// Canonical JSON document, newline terminated.
  std::string output;
};

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

const std::vector<std::string>& subcommands();

/// Never throws on bad input: errors become an {"error": ...} document with exit code 2.
JobResult run(const JobSpec& job);

}  // namespace statikit::cli
