#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "bispan/verify.hpp"

namespace bispan::cli {

enum class Subcommand {
  spectral,
  check_tree,
  extremal,
  verify_theorem,
  proof_sweep,
  monotonicity_fuzz,
};

enum class OutputFormat { json, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

struct CommandConfig {
  Subcommand command = Subcommand::spectral;
  std::string graph_path;
  std::optional<int> k;
  std::optional<std::string> demand_path;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t s = 1;
  std::optional<std::string> graph_out;
  SweepGrid grid;
  double tol = 0.0;
  std::size_t jobs = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 10000;
  OutputFormat format = OutputFormat::json;
};

/// Parses "a..b" (or a single "a") into an inclusive range.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);

/// Executes one subcommand. Returns kExitOk, kExitVerificationFailed when a
/// check fails, or kExitInputError with a diagnostic on `err`.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and runs. Usage errors exit with kExitInputError.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bispan::cli
