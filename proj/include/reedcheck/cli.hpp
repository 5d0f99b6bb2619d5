#ifndef REEDCHECK_CLI_HPP
#define REEDCHECK_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace reedcheck::cli {

enum class Command { check, enumerate, search, sample, color, patterns };

enum ExitStatus : int {
  kOk = 0,
  kUsage = 1,
  kCounterexample = 2,
  kBudgetExhausted = 3,
};

/// Environment variable overriding the solver node budget.
inline constexpr const char *kNodeBudgetEnv = "REEDCHECK_NODE_BUDGET";

struct RunConfig {
  Command command = Command::check;
  /// Inline graph6 strings.
  std::vector<std::string> graphs;
  /// File with one graph6 per line, or "-" for standard input.
  std::string input;
  std::string class_name;
  int n = -1;
  int max_n = -1;
  double p = 0.5;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out;
  bool json = true;
  /// color: also run the exact chromatic number solver.
  bool exact = false;
  std::uint64_t node_limit = 0; // 0: default or environment
  unsigned threads = 0;
};

/// Executes one command. Diagnostics go to err; results go to out unless
/// config.out names a file.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace reedcheck::cli

#endif // REEDCHECK_CLI_HPP
