#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "riskc/rng.hpp"

namespace riskc {

/// Construction tolerance on probability mass.
inline constexpr double kMassTolerance = 1e-12;
/// Tolerance for derived identities (duality gaps, algebraic identities).
inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Ascending ordering of the atoms plus the cumulative weights in that order.
struct SortedView {
  std::vector<std::size_t> permutation;
  std::vector<double> cumulative_weights;
};

/// A finite probability space with payoff values on its atoms. Positive
/// outcomes are gains, negative ones are losses.
///
/// Immutable after construction. Weights are strictly positive and sum to one
/// within kMassTolerance; the sorted view is built once up front.
class EmpiricalDistribution {
 public:
  /// Equiprobable atoms.
  explicit EmpiricalDistribution(std::vector<double> outcomes);
  EmpiricalDistribution(std::vector<double> outcomes, std::vector<double> weights);

  static EmpiricalDistribution constant(double value) { return EmpiricalDistribution({value}); }

  std::size_t size() const noexcept { return outcomes_.size(); }
  std::span<const double> outcomes() const noexcept { return outcomes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  bool equiprobable() const noexcept { return equiprobable_; }
  const SortedView& sorted() const noexcept { return sorted_; }

  /// i-th smallest outcome.
  double sorted_outcome(std::size_t i) const { return outcomes_[sorted_.permutation[i]]; }
  double sorted_weight(std::size_t i) const { return weights_[sorted_.permutation[i]]; }

  bool is_constant() const noexcept;

  /// Same atoms, transformed outcomes.
  EmpiricalDistribution map(const std::function<double(double)>& f) const;
  EmpiricalDistribution shifted(double c) const;
  EmpiricalDistribution scaled(double lambda) const;
  EmpiricalDistribution negated() const { return scaled(-1.0); }

  /// Same atoms, new outcome column.
  EmpiricalDistribution with_outcomes(std::vector<double> outcomes) const;

 private:
  EmpiricalDistribution(std::vector<double> outcomes, std::vector<double> weights, bool equiprobable);
  void build();

  std::vector<double> outcomes_;
  std::vector<double> weights_;
  bool equiprobable_ = false;
  SortedView sorted_;
};

/// Pointwise X + Y on shared atoms. Throws ValidationError if the atoms differ.
EmpiricalDistribution add(const EmpiricalDistribution& x, const EmpiricalDistribution& y);
/// Pointwise lambda*X + (1-lambda)*Y on shared atoms.
EmpiricalDistribution mix(const EmpiricalDistribution& x, const EmpiricalDistribution& y,
                          double lambda);
bool same_atoms(const EmpiricalDistribution& x, const EmpiricalDistribution& y) noexcept;

/// Left-continuous generalized inverse inf{x : F(x) >= u}, u in (0,1].
double quantile(const EmpiricalDistribution& d, double u);

double expectation(const EmpiricalDistribution& d);

/// Weighted p-norm of f(X); p may be kInfinity (max |f(X)| over the support).
double p_norm(const EmpiricalDistribution& d, const std::function<double(double)>& transform,
              double p);
double p_norm(const EmpiricalDistribution& d, double p);

double essential_inf(const EmpiricalDistribution& d);
double essential_sup(const EmpiricalDistribution& d);

/// Integral of the quantile function over (0, t], exact on the step function.
double integrated_quantile(const EmpiricalDistribution& d, double t);

/// Second-order stochastic dominance of x over y: the integrated quantile of x
/// is at least that of y at every breakpoint of either step function.
bool ssd_dominates(const EmpiricalDistribution& x, const EmpiricalDistribution& y);

/// Pairwise check (X(w)-X(w'))(Y(w)-Y(w')) >= 0 over all atom pairs.
bool is_comonotone(std::span<const double> x, std::span<const double> y);

/// Two payoff columns on n shared equiprobable atoms, each a nondecreasing
/// map of a common latent uniform draw.
std::pair<EmpiricalDistribution, EmpiricalDistribution> comonotone_pair(Rng& rng, std::size_t n);

}  // namespace riskc
