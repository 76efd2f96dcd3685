#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nkoszul/io.hpp"

namespace nkoszul {

inline constexpr const char* kToolName = "nkoszul";
inline constexpr const char* kToolVersion = NKOSZUL_VERSION;
inline constexpr std::uint64_t kDefaultMaxAmbient = 10'000'000;

struct RunConfig {
  std::string command;
  std::string algebra = "poly";  // poly | antisym | qspace | free | file:<path>
  std::optional<std::size_t> n;
  std::optional<std::size_t> N;
  std::size_t max_degree = 6;
  std::optional<std::string> q;            // uniform quantum-space parameter
  std::optional<std::string> matrix;       // identity | zero | ones | inline JSON
  std::optional<std::string> matrix_file;
  std::optional<std::uint64_t> random_seed;
  std::string format = "json";             // json | text
  bool allow_large = false;
  /// Limit on n^{2D} for kmt-check; KOSZUL_MAX_AMBIENT overrides the default.
  std::optional<std::uint64_t> max_ambient;
};

struct RunResult {
  int exit_code = 0;
  Json report;
  std::string text;

  /// The report rendered in the configured format.
  std::string render(const RunConfig& config) const;
};

/// Usage or feasibility problem (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& cli_commands();

Json config_to_json(const RunConfig& c);
AlgebraPresentation make_algebra(const RunConfig& c);
Matrix make_matrix(const RunConfig& c);

/// Runs one command. Never throws: errors become exit code 2 with an
/// "error" field in the report.
RunResult run(const RunConfig& config);

/// Parses argv into a config and runs it; returns the process exit code.
int cli_main(int argc, char** argv);

}  // namespace nkoszul
