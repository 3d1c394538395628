#include "riskc/risk_measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riskc/errors.hpp"

namespace riskc {

double neg_expectation(const EmpiricalDistribution& d) { return -expectation(d); }

double value_at_risk(const EmpiricalDistribution& d, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("VaR level must lie in (0,1], got " + std::to_string(alpha));
  }
  return -quantile(d, alpha);
}

double expected_shortfall(const EmpiricalDistribution& d, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("ES level must lie in (0,1], got " + std::to_string(alpha));
  }
  if (d.is_constant()) return -d.sorted_outcome(0);
  // Mass still to be taken from the lower tail. Stops once the remainder is
  // rounding noise so that lattice levels do not pick up the next atom.
  double remaining = alpha;
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double take = std::min(d.sorted_weight(i), remaining);
    acc += d.sorted_outcome(i) * take;
    remaining -= take;
    if (remaining <= 1e-13 * alpha) break;
  }
  return -acc / alpha;
}

double entropic_risk(const EmpiricalDistribution& d, double theta) {
  if (!(theta > 0.0)) throw DomainError("entropic risk requires theta > 0");
  const double low = essential_inf(d);
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc += d.weights()[i] * std::expm1(-theta * (d.outcomes()[i] - low));
  }
  return -low + std::log1p(acc) / theta;
}

double worst_case_risk(const EmpiricalDistribution& d) { return -essential_inf(d); }

double spectral_risk(const EmpiricalDistribution& d, const SpectralMeasure& m) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m.alphas().size(); ++j) {
    if (m.masses()[j] == 0.0) continue;
    acc += m.masses()[j] * expected_shortfall(d, m.alphas()[j]);
  }
  return acc;
}

}  // namespace riskc
