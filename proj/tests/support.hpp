#pragma once

#include <vector>

#include "oracles.hpp"
#include "riskc/rng.hpp"
#include "riskc/scenario.hpp"

namespace testing {

/// Random distribution with n atoms; about a third of the time the weights
/// are unequal. Outcomes are mixed integers and continuous values so ties occur.
inline riskc::EmpiricalDistribution random_dist(riskc::Rng& rng, std::size_t n) {
  std::vector<double> xs(n);
  for (auto& x : xs) {
    x = rng.coin(0.3) ? static_cast<double>(rng.integer(-5, 5)) : rng.uniform(-20.0, 20.0);
  }
  if (n > 1 && rng.coin(0.35)) {
    std::vector<double> ws(n);
    double total = 0.0;
    for (auto& w : ws) total += (w = rng.uniform(0.05, 1.0));
    for (auto& w : ws) w /= total;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) sum += ws[i];
    ws.back() = 1.0 - sum;
    return riskc::EmpiricalDistribution(xs, ws);
  }
  return riskc::EmpiricalDistribution(xs);
}

inline oracle::Dist to_oracle(const riskc::EmpiricalDistribution& d) {
  return {std::vector<double>(d.outcomes().begin(), d.outcomes().end()),
          std::vector<double>(d.weights().begin(), d.weights().end())};
}

}  // namespace testing
