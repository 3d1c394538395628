#pragma once

#include "riskc/measure_spec.hpp"
#include "riskc/scenario.hpp"

namespace riskc {

/// Evaluate any spec tree on a distribution.
double evaluate(const MeasureSpec& spec, const EmpiricalDistribution& d);

/// rho(d) + beta * D(d) for a composition, or the loss-deviation value; other
/// specs are evaluated as themselves.
double evaluate_composition(const EmpiricalDistribution& d, const MeasureSpec& spec);

/// rho(X) + beta * ||(X - rho*(X))^-||_p with rho*(X) = -rho(X), recomputed per
/// distribution. beta must lie in [0,1].
double loss_deviation(const EmpiricalDistribution& d, const MeasureSpec& rho, double beta,
                      double p);

/// The dispersion part of a composed functional: beta * D(d) for a
/// composition, beta * ||(X - rho*(X))^-||_p for a loss-deviation, and the
/// deviation itself for a deviation spec. Throws ConfigurationError for plain
/// risk measures.
double penalty_term(const MeasureSpec& spec, const EmpiricalDistribution& d);

/// Risk part of a composed functional (rho itself for plain risk measures).
double risk_term(const MeasureSpec& spec, const EmpiricalDistribution& d);

struct LimitednessCheck {
  bool holds;
  double value;
  /// -inf X - value; negative when violated.
  double slack;
};

/// value <= -inf X, evaluated exactly (no tolerance) with the slack reported.
LimitednessCheck check_limitedness(const EmpiricalDistribution& d, const MeasureSpec& spec);

struct AcceptanceCheck {
  bool member;
  double value;
  /// Risk part and penalty part; member iff risk <= -penalty.
  double risk;
  double penalty;
};

/// value <= 0, i.e. the position needs no added capital.
AcceptanceCheck acceptance_member(const EmpiricalDistribution& d, const MeasureSpec& spec);

}  // namespace riskc
