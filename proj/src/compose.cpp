#include "riskc/compose.hpp"

#include <algorithm>
#include <string>

#include "riskc/deviation_measures.hpp"
#include "riskc/errors.hpp"
#include "riskc/risk_measures.hpp"

namespace riskc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double shortfall_norm(const EmpiricalDistribution& d, double level, double p) {
  return p_norm(d, [level](double x) { return std::max(level - x, 0.0); }, p);
}

}  // namespace

double evaluate(const MeasureSpec& spec, const EmpiricalDistribution& d) {
  return std::visit(
      overloaded{
          [&](const node::NegExpectation&) { return neg_expectation(d); },
          [&](const node::ValueAtRisk& n) { return value_at_risk(d, n.alpha); },
          [&](const node::ExpectedShortfall& n) { return expected_shortfall(d, n.alpha); },
          [&](const node::Entropic& n) { return entropic_risk(d, n.theta); },
          [&](const node::WorstCase&) { return worst_case_risk(d); },
          [&](const node::Spectral& n) { return spectral_risk(d, n.spectrum); },
          [&](const node::FullDeviation& n) { return full_p_deviation(d, n.p); },
          [&](const node::LowerSemideviation& n) { return lower_p_semideviation(d, n.p); },
          [&](const node::InducedDeviation& n) { return induced_deviation(d, *n.rho).value; },
          [&](const node::RangeDeviation&) { return range_deviation(d); },
          [&](const node::Composition& n) {
            const double r = evaluate(*n.rho, d);
            return n.beta == 0.0 ? r : r + n.beta * evaluate(*n.dev, d);
          },
          [&](const node::LossDeviation& n) { return loss_deviation(d, *n.rho, n.beta, n.p); },
      },
      spec.node());
}

double evaluate_composition(const EmpiricalDistribution& d, const MeasureSpec& spec) {
  return evaluate(spec, d);
}

double loss_deviation(const EmpiricalDistribution& d, const MeasureSpec& rho, double beta,
                      double p) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("loss deviation beta must lie in [0,1]");
  if (!(p >= 1.0)) throw DomainError("loss deviation requires p >= 1");
  const double r = evaluate(rho, d);
  if (beta == 0.0) return r;
  return r + beta * shortfall_norm(d, -r, p);
}

double penalty_term(const MeasureSpec& spec, const EmpiricalDistribution& d) {
  if (spec.role() == Role::deviation) return evaluate(spec, d);
  if (const auto* c = std::get_if<node::Composition>(&spec.node())) {
    return c->beta == 0.0 ? 0.0 : c->beta * evaluate(*c->dev, d);
  }
  if (const auto* ld = std::get_if<node::LossDeviation>(&spec.node())) {
    if (ld->beta == 0.0) return 0.0;
    return ld->beta * shortfall_norm(d, -evaluate(*ld->rho, d), ld->p);
  }
  throw ConfigurationError("'" + std::string(spec.kind()) + "' has no deviation component");
}

double risk_term(const MeasureSpec& spec, const EmpiricalDistribution& d) {
  if (const auto* c = std::get_if<node::Composition>(&spec.node())) return evaluate(*c->rho, d);
  if (const auto* ld = std::get_if<node::LossDeviation>(&spec.node())) {
    return evaluate(*ld->rho, d);
  }
  if (spec.role() != Role::risk) throw ConfigurationError("deviation has no risk component");
  return evaluate(spec, d);
}

LimitednessCheck check_limitedness(const EmpiricalDistribution& d, const MeasureSpec& spec) {
  const double value = evaluate(spec, d);
  const double slack = -essential_inf(d) - value;
  return {slack >= 0.0, value, slack};
}

AcceptanceCheck acceptance_member(const EmpiricalDistribution& d, const MeasureSpec& spec) {
  const double value = evaluate(spec, d);
  const bool composed = std::holds_alternative<node::Composition>(spec.node()) ||
                        std::holds_alternative<node::LossDeviation>(spec.node());
  const double risk = composed ? risk_term(spec, d) : value;
  const double penalty = composed ? penalty_term(spec, d) : 0.0;
  return {value <= 0.0, value, risk, penalty};
}

}  // namespace riskc
