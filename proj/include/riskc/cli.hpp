#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace riskc {

enum class Command { eval, axioms, class_check, dual, kusuoka, calibrate_beta, implication_suite };

std::string_view to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFalsified = 2;

/// One invocation. Spec fields hold JSON text, or "@path" to read it from a
/// file.
struct RunConfig {
  Command command = Command::eval;
  std::optional<std::string> measure;
  std::optional<std::string> rho;
  std::optional<std::string> dev;
  /// Scenario file (.csv or .json), or inline JSON when it starts with '[' or '{'.
  std::optional<std::string> scenarios;
  /// Column to read; the first column when empty.
  std::string column;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t dim = 16;
  double tolerance = 1e-9;
  std::optional<std::string> axiom;
  std::optional<std::string> functional_class;
  std::size_t candidates = 10000;
  std::optional<double> beta;
  /// Empty writes to stdout.
  std::string output;
};

struct RunResult {
  int exit_code = kExitOk;
  /// JSON document, newline terminated; empty on error.
  std::string report;
  std::string error;
};

/// Dispatch one command. Never throws: library errors become exit 1 with the
/// message in error.
RunResult run(const RunConfig& config);

}  // namespace riskc
