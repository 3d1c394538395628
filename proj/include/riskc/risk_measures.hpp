#pragma once

#include "riskc/measure_spec.hpp"
#include "riskc/scenario.hpp"

namespace riskc {

/// -E[X].
double neg_expectation(const EmpiricalDistribution& d);

/// -F^{-1}(alpha). Not sub-additive; kept as a negative control.
double value_at_risk(const EmpiricalDistribution& d, double alpha);

/// Tail average -(1/alpha) * integral_0^alpha F^{-1}(u) du, with the atom
/// straddling alpha counted fractionally.
double expected_shortfall(const EmpiricalDistribution& d, double alpha);

/// (1/theta) log E[exp(-theta X)].
///
/// Evaluated as -inf X + (1/theta) log1p(E[expm1(-theta (X - inf X))]), i.e.
/// shifted by the maximum of -X over the support, which keeps every exponent
/// nonpositive and stays accurate as theta -> 0.
double entropic_risk(const EmpiricalDistribution& d, double theta);

/// sup(-X) = -inf X.
double worst_case_risk(const EmpiricalDistribution& d);

/// Sum_j masses[j] * ES(alphas[j]).
double spectral_risk(const EmpiricalDistribution& d, const SpectralMeasure& m);

}  // namespace riskc
