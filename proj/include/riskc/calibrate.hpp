#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "riskc/measure_spec.hpp"
#include "riskc/scenario.hpp"

namespace riskc {

struct CalibrationOptions {
  std::size_t candidates = 10000;
  std::uint64_t seed = 1;
  /// Largest atom count; the deterministic sweep covers 2..dim.
  std::size_t dim = 16;
  /// Trials spent checking that rho is limited before mining.
  std::size_t precheck_trials = 2000;
};

/// Empirical upper bound on the weights beta for which rho + beta * D stays
/// limited: the smallest (-rho(X) - inf X) / D(X) seen over candidates with
/// D(X) > 0. Any beta above it is refuted by the witness; beta below it only
/// means no counterexample was found.
struct BetaBound {
  double upper_bound = 0.0;
  EmpiricalDistribution witness = EmpiricalDistribution::constant(0.0);
  double numerator = 0.0;
  double denominator = 0.0;
  std::size_t candidates_evaluated = 0;
  /// Candidates skipped because D(X) was zero.
  std::size_t degenerate_candidates = 0;
  std::size_t witness_index = 0;
  std::string witness_family;
  std::vector<std::string> family_tags;
};

/// (-rho(X) - inf X, D(X)).
std::pair<double, double> limitedness_ratio_parts(const MeasureSpec& rho, const MeasureSpec& dev,
                                                  const EmpiricalDistribution& d);

/// Candidate i of the stream mined by beta_bound: first the deterministic
/// tail sweep, then seeded random draws. The tag names the family.
EmpiricalDistribution calibration_candidate(const CalibrationOptions& options, std::size_t index,
                                            std::string* tag = nullptr);

/// Throws ConfigurationError if rho is not a limited risk measure or dev is
/// not a deviation, DegenerateDeviationError if D vanishes on every candidate.
BetaBound beta_bound(const MeasureSpec& rho, const MeasureSpec& dev, const CalibrationOptions& options);

struct InadmissibilityWitness {
  EmpiricalDistribution witness;
  double beta = 0.0;
  /// rho(w) + beta * D(w).
  double value = 0.0;
  /// -inf w.
  double bound = 0.0;
  /// value - bound, positive.
  double violation = 0.0;
};

/// The limitedness violation of rho + beta * D at the bound's witness when
/// beta exceeds the bound; nothing otherwise.
std::optional<InadmissibilityWitness> certify_inadmissible(const MeasureSpec& rho, const MeasureSpec& dev,
                                                           double beta, const BetaBound& bound);

nlohmann::ordered_json to_json(const BetaBound& bound);
nlohmann::ordered_json to_json(const InadmissibilityWitness& witness);

}  // namespace riskc
