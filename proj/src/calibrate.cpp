#include "riskc/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskc/axioms.hpp"
#include "riskc/compose.hpp"
#include "riskc/errors.hpp"
#include "riskc/generators.hpp"
#include "riskc/parallel.hpp"
#include "riskc/report_json.hpp"
#include "riskc/risk_measures.hpp"

namespace riskc {

namespace {

constexpr const char* kSweepTag = "tail_sweep";

std::size_t sweep_size(std::size_t dim) { return dim < 2 ? 0 : dim * (dim - 1); }

// Sweep entry k: n atoms, t of them at the minimum -1, the rest either all at
// 0 or spread evenly over (0, 1].
EmpiricalDistribution sweep_candidate(std::size_t k) {
  for (std::size_t n = 2;; ++n) {
    const std::size_t block = 2 * (n - 1);
    if (k >= block) {
      k -= block;
      continue;
    }
    const std::size_t t = k / 2 + 1;
    const bool ramp = k % 2 == 1;
    std::vector<double> x(n, -1.0);
    for (std::size_t i = t; i < n; ++i) {
      x[i] = ramp ? static_cast<double>(i - t + 1) / static_cast<double>(n - t) : 0.0;
    }
    return EmpiricalDistribution(std::move(x));
  }
}

}  // namespace

std::pair<double, double> limitedness_ratio_parts(const MeasureSpec& rho, const MeasureSpec& dev,
                                                  const EmpiricalDistribution& d) {
  return {-evaluate(rho, d) - essential_inf(d), evaluate(dev, d)};
}

EmpiricalDistribution calibration_candidate(const CalibrationOptions& options, std::size_t index,
                                            std::string* tag) {
  const std::size_t sweep = sweep_size(options.dim);
  if (index < sweep) {
    if (tag) *tag = kSweepTag;
    return sweep_candidate(index);
  }
  Rng rng(derive_seed(options.seed, index));
  const Family family = draw_family(rng);
  const std::size_t n = draw_dim(rng, std::max<std::size_t>(1, options.dim));
  auto x = draw_outcomes(rng, family, n);
  const auto w = rng.coin(0.5) ? draw_weights(rng, n) : std::vector<double>{};
  if (tag) *tag = std::string(to_string(family));
  return make_distribution(std::move(x), w);
}

BetaBound beta_bound(const MeasureSpec& rho, const MeasureSpec& dev, const CalibrationOptions& options) {
  if (rho.role() != Role::risk) {
    throw ConfigurationError("calibration needs a risk measure as rho, got " + rho.label());
  }
  if (dev.role() != Role::deviation) {
    throw ConfigurationError("calibration needs a deviation measure as dev, got " + dev.label());
  }
  if (options.candidates == 0) throw DomainError("calibration needs at least one candidate");

  HarnessOptions pre;
  pre.trials = options.precheck_trials;
  pre.seed = options.seed;
  pre.dim = std::max<std::size_t>(2, options.dim);
  if (options.precheck_trials > 0) {
    const auto report = check_axiom(rho, Axiom::limitedness, pre);
    if (report.verdict == Verdict::fail) {
      throw ConfigurationError(rho.label() + " is not limited (counterexample at trial " +
                               std::to_string(report.counterexample->trial) +
                               "); no beta keeps the composition limited");
    }
  }

  const std::size_t total = options.candidates;
  std::vector<double> num(total), den(total);
  parallel_for(0, total, [&](std::size_t i) {
    const auto d = calibration_candidate(options, i);
    std::tie(num[i], den[i]) = limitedness_ratio_parts(rho, dev, d);
  });

  BetaBound out;
  out.candidates_evaluated = total;
  std::size_t best = total;
  double best_ratio = kInfinity;
  for (std::size_t i = 0; i < total; ++i) {
    if (!(den[i] > 0.0)) {
      ++out.degenerate_candidates;
      continue;
    }
    // The numerator is nonnegative for a limited rho; rounding can leave it a
    // few ulps below zero.
    const double ratio = std::max(0.0, num[i]) / den[i];
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best = i;
    }
  }
  if (best == total) {
    throw DegenerateDeviationError(dev.label() + " is zero on all " + std::to_string(total) +
                                   " candidates");
  }
  out.upper_bound = best_ratio;
  out.witness = calibration_candidate(options, best, &out.witness_family);
  out.witness_index = best;
  out.numerator = num[best];
  out.denominator = den[best];

  if (sweep_size(options.dim) > 0) out.family_tags.emplace_back(kSweepTag);
  if (total > sweep_size(options.dim)) {
    for (Family f : kFamilies) out.family_tags.emplace_back(to_string(f));
  }
  return out;
}

std::optional<InadmissibilityWitness> certify_inadmissible(const MeasureSpec& rho, const MeasureSpec& dev,
                                                           double beta, const BetaBound& bound) {
  if (!(beta > bound.upper_bound)) return std::nullopt;
  const auto& w = bound.witness;
  InadmissibilityWitness out{w};
  out.beta = beta;
  out.value = evaluate(rho, w) + beta * evaluate(dev, w);
  out.bound = -essential_inf(w);
  out.violation = out.value - out.bound;
  if (!(out.violation > 0.0)) return std::nullopt;
  return out;
}

namespace {

nlohmann::ordered_json distribution_json(const EmpiricalDistribution& d) {
  nlohmann::ordered_json j;
  j["outcomes"] = std::vector<double>(d.outcomes().begin(), d.outcomes().end());
  if (!d.equiprobable()) j["weights"] = std::vector<double>(d.weights().begin(), d.weights().end());
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const BetaBound& b) {
  nlohmann::ordered_json j;
  j["label"] = "empirical upper bound on admissible beta";
  j["upper_bound"] = b.upper_bound;
  j["numerator"] = b.numerator;
  j["denominator"] = b.denominator;
  j["witness"] = distribution_json(b.witness);
  j["witness_family"] = b.witness_family;
  j["witness_index"] = b.witness_index;
  j["candidates_evaluated"] = b.candidates_evaluated;
  j["degenerate_candidates"] = b.degenerate_candidates;
  j["family_tags"] = b.family_tags;
  return j;
}

nlohmann::ordered_json to_json(const InadmissibilityWitness& w) {
  nlohmann::ordered_json j;
  j["beta"] = w.beta;
  j["witness"] = distribution_json(w.witness);
  j["value"] = w.value;
  j["minus_inf"] = w.bound;
  j["violation"] = w.violation;
  return j;
}

}  // namespace riskc
