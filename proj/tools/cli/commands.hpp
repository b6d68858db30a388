#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace simplexvol::cli {

enum class OutputFormat { json, csv };

inline constexpr const char* kSchemaVersion = "1";

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

struct CommandConfig {
  std::string command;  ///< volume, faces, realizable, jacobian, spectrum, counterexample, invert, sweep
  std::optional<std::string> input_path;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<double> t;
  std::optional<double> x;
  std::optional<int> face_dim;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::optional<int> starts;
  int points = 9;
  int max_iters = 200;
  std::uint64_t max_order = 5000;
  std::vector<int> face;  ///< volume: face vertex labels, empty for the whole simplex
  OutputFormat output_format = OutputFormat::json;
  bool format_given = false;
  std::optional<std::string> output_path;
};

struct RunResult {
  int exit_code = kSuccess;
  std::string output;      ///< report, written to the output path or stdout
  std::string diagnostic;  ///< one-line message for stderr
};

/// Dispatches a validated config. Never throws; errors map to exit codes.
RunResult run(const CommandConfig& config);

/// Full command line front end: parses argv, runs, writes the report.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplexvol::cli
