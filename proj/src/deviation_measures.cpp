#include "riskc/deviation_measures.hpp"

#include <algorithm>

#include "riskc/compose.hpp"
#include "riskc/errors.hpp"

namespace riskc {

double full_p_deviation(const EmpiricalDistribution& d, double p) {
  const double mean = expectation(d);
  return p_norm(d, [mean](double x) { return x - mean; }, p);
}

double lower_p_semideviation(const EmpiricalDistribution& d, double p) {
  const double mean = expectation(d);
  return p_norm(d, [mean](double x) { return std::max(mean - x, 0.0); }, p);
}

InducedDeviation induced_deviation(const EmpiricalDistribution& d, const MeasureSpec& rho) {
  if (rho.role() != Role::risk) throw ValidationError("induced deviation needs a risk measure");
  const double mean = expectation(d);
  return {evaluate(rho, d.shifted(-mean)), rho.is_neg_expectation()};
}

double range_deviation(const EmpiricalDistribution& d) {
  return std::max(expectation(d) - essential_inf(d), 0.0);
}

}  // namespace riskc
