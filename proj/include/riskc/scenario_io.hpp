#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riskc/scenario.hpp"

namespace riskc {

/// Scenario payoffs for one or more assets on shared atoms, in input row order.
struct ScenarioTable {
  std::vector<std::string> columns;
  /// values[c][row]
  std::vector<std::vector<double>> values;
  /// Per-row probabilities; equiprobable when absent.
  std::optional<std::vector<double>> weights;

  std::size_t rows() const { return values.empty() ? 0 : values.front().size(); }
  EmpiricalDistribution distribution(std::size_t column) const;
  /// Throws ConfigurationError when no column has that name.
  EmpiricalDistribution distribution(std::string_view column) const;
};

/// CSV with a header row; a column named "weight" holds probabilities. A
/// first row made only of numbers is read as data with columns x0, x1, ...
ScenarioTable read_scenarios_csv(std::istream& in);

/// A bare array of numbers, {"outcomes":[...],"weights":[...]}, or
/// {"columns":{"a":[...],...},"weights":[...]} (weights optional).
ScenarioTable parse_scenarios_json(std::string_view text);

/// Dispatch on extension: .json is JSON, anything else CSV.
ScenarioTable load_scenarios(const std::filesystem::path& path);

}  // namespace riskc
