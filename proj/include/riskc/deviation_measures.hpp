#pragma once

#include "riskc/measure_spec.hpp"
#include "riskc/scenario.hpp"

namespace riskc {

/// ||X - E[X]||_p.
double full_p_deviation(const EmpiricalDistribution& d, double p);

/// ||(X - E[X])^-||_p.
double lower_p_semideviation(const EmpiricalDistribution& d, double p);

struct InducedDeviation {
  double value;
  /// rho coincides with the negative expectation, so the deviation is
  /// identically zero.
  bool degenerate;
};

/// rho(X - E[X]). Accepts any risk spec; the result is flagged when rho is
/// the negative expectation.
InducedDeviation induced_deviation(const EmpiricalDistribution& d, const MeasureSpec& rho);

/// E[X] - inf X, the upper envelope in the lower range dominance axiom.
double range_deviation(const EmpiricalDistribution& d);

}  // namespace riskc
