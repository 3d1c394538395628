#include "riskc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "riskc/errors.hpp"

namespace riskc {

namespace {

// Cumulative weights within this distance of a level count as reaching it, so
// that levels such as 0.3 land on the atom boundary they name.
constexpr double kLevelSnap = 1e-12;

std::vector<double> equal_weights(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

}  // namespace

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> outcomes)
    : EmpiricalDistribution(outcomes, equal_weights(outcomes.size()), true) {}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> outcomes,
                                             std::vector<double> weights)
    : EmpiricalDistribution(std::move(outcomes), std::move(weights), false) {}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> outcomes,
                                             std::vector<double> weights, bool equiprobable)
    : outcomes_(std::move(outcomes)), weights_(std::move(weights)), equiprobable_(equiprobable) {
  if (outcomes_.empty()) {
    throw ValidationError("distribution must have at least one outcome");
  }
  if (outcomes_.size() != weights_.size()) {
    throw ValidationError("outcomes and weights differ in length (" +
                          std::to_string(outcomes_.size()) + " vs " +
                          std::to_string(weights_.size()) + ")");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw ValidationError("weight " + std::to_string(i) + " is not strictly positive");
    }
    if (!std::isfinite(outcomes_[i])) {
      throw ValidationError("outcome " + std::to_string(i) + " is not finite");
    }
    total += weights_[i];
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw ValidationError("weights must sum to 1 (got " + std::to_string(total) + ")");
  }
  if (!equiprobable_) {
    equiprobable_ = std::all_of(weights_.begin(), weights_.end(),
                                [&](double w) { return w == weights_.front(); });
  }
  build();
}

void EmpiricalDistribution::build() {
  const std::size_t n = outcomes_.size();
  sorted_.permutation.resize(n);
  std::iota(sorted_.permutation.begin(), sorted_.permutation.end(), std::size_t{0});
  std::stable_sort(sorted_.permutation.begin(), sorted_.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return outcomes_[a] < outcomes_[b]; });
  sorted_.cumulative_weights.resize(n);
  if (equiprobable_) {
    // (i+1)/n is correctly rounded, unlike a running sum of 1/n.
    for (std::size_t i = 0; i < n; ++i) {
      sorted_.cumulative_weights[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    }
  } else {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += weights_[sorted_.permutation[i]];
      sorted_.cumulative_weights[i] = acc;
    }
    sorted_.cumulative_weights.back() = 1.0;
  }
}

bool EmpiricalDistribution::is_constant() const noexcept {
  return sorted_outcome(0) == sorted_outcome(size() - 1);
}

EmpiricalDistribution EmpiricalDistribution::map(const std::function<double(double)>& f) const {
  std::vector<double> out(outcomes_.size());
  std::transform(outcomes_.begin(), outcomes_.end(), out.begin(), f);
  return with_outcomes(std::move(out));
}

EmpiricalDistribution EmpiricalDistribution::shifted(double c) const {
  return map([c](double x) { return x + c; });
}

EmpiricalDistribution EmpiricalDistribution::scaled(double lambda) const {
  return map([lambda](double x) { return lambda * x; });
}

EmpiricalDistribution EmpiricalDistribution::with_outcomes(std::vector<double> outcomes) const {
  if (outcomes.size() != outcomes_.size()) {
    throw ValidationError("replacement outcome column has the wrong length");
  }
  return EmpiricalDistribution(std::move(outcomes), weights_, equiprobable_);
}

bool same_atoms(const EmpiricalDistribution& x, const EmpiricalDistribution& y) noexcept {
  return x.size() == y.size() && std::equal(x.weights().begin(), x.weights().end(),
                                            y.weights().begin());
}

EmpiricalDistribution add(const EmpiricalDistribution& x, const EmpiricalDistribution& y) {
  if (!same_atoms(x, y)) throw ValidationError("X + Y requires shared atoms");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.outcomes()[i] + y.outcomes()[i];
  return x.with_outcomes(std::move(out));
}

EmpiricalDistribution mix(const EmpiricalDistribution& x, const EmpiricalDistribution& y,
                          double lambda) {
  if (!same_atoms(x, y)) throw ValidationError("convex mixture requires shared atoms");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = lambda * x.outcomes()[i] + (1.0 - lambda) * y.outcomes()[i];
  }
  return x.with_outcomes(std::move(out));
}

double quantile(const EmpiricalDistribution& d, double u) {
  if (!(u > 0.0 && u <= 1.0)) {
    throw DomainError("quantile level must lie in (0,1], got " + std::to_string(u));
  }
  const auto& cum = d.sorted().cumulative_weights;
  const auto it = std::lower_bound(cum.begin(), cum.end(), u - kLevelSnap);
  const auto i = it == cum.end() ? cum.size() - 1 : static_cast<std::size_t>(it - cum.begin());
  return d.sorted_outcome(i);
}

double expectation(const EmpiricalDistribution& d) {
  if (d.is_constant()) return d.sorted_outcome(0);
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) acc += d.outcomes()[i] * d.weights()[i];
  return std::clamp(acc, essential_inf(d), essential_sup(d));
}

double p_norm(const EmpiricalDistribution& d, const std::function<double(double)>& transform,
              double p) {
  if (!(p >= 1.0)) throw DomainError("p-norm requires p >= 1, got " + std::to_string(p));
  if (std::isinf(p)) {
    double sup = 0.0;
    for (double x : d.outcomes()) sup = std::max(sup, std::abs(transform(x)));
    return sup;
  }
  double acc = 0.0;
  if (p == 1.0) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      acc += d.weights()[i] * std::abs(transform(d.outcomes()[i]));
    }
    return acc;
  }
  if (p == 2.0) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double v = transform(d.outcomes()[i]);
      acc += d.weights()[i] * v * v;
    }
    return std::sqrt(acc);
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc += d.weights()[i] * std::pow(std::abs(transform(d.outcomes()[i])), p);
  }
  return std::pow(acc, 1.0 / p);
}

double p_norm(const EmpiricalDistribution& d, double p) {
  return p_norm(d, [](double x) { return x; }, p);
}

double essential_inf(const EmpiricalDistribution& d) { return d.sorted_outcome(0); }

double essential_sup(const EmpiricalDistribution& d) { return d.sorted_outcome(d.size() - 1); }

double integrated_quantile(const EmpiricalDistribution& d, double t) {
  const auto& cum = d.sorted().cumulative_weights;
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const bool last = i + 1 == d.size();
    if (cum[i] >= t || last) {
      acc += d.sorted_outcome(i) * (t - prev);
      break;
    }
    acc += d.sorted_outcome(i) * (cum[i] - prev);
    prev = cum[i];
  }
  return acc;
}

namespace {

// Integrated quantile at each level of an ascending list, one linear sweep.
std::vector<double> integrated_quantile_at(const EmpiricalDistribution& d,
                                           const std::vector<double>& levels) {
  const auto& cum = d.sorted().cumulative_weights;
  std::vector<double> out(levels.size());
  std::size_t i = 0;
  double base = 0.0;  // integral up to cum[i-1]
  double prev = 0.0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const double t = levels[k];
    while (i + 1 < d.size() && cum[i] < t) {
      base += d.sorted_outcome(i) * (cum[i] - prev);
      prev = cum[i];
      ++i;
    }
    out[k] = base + d.sorted_outcome(i) * (t - prev);
  }
  return out;
}

}  // namespace

bool ssd_dominates(const EmpiricalDistribution& x, const EmpiricalDistribution& y) {
  std::vector<double> levels;
  levels.reserve(x.size() + y.size());
  levels.insert(levels.end(), x.sorted().cumulative_weights.begin(),
                x.sorted().cumulative_weights.end());
  levels.insert(levels.end(), y.sorted().cumulative_weights.begin(),
                y.sorted().cumulative_weights.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  const auto gx = integrated_quantile_at(x, levels);
  const auto gy = integrated_quantile_at(y, levels);
  const double scale =
      1.0 + std::max({std::abs(essential_inf(x)), std::abs(essential_sup(x)),
                      std::abs(essential_inf(y)), std::abs(essential_sup(y))});
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (gx[k] < gy[k] - kMassTolerance * scale) return false;
  }
  return true;
}

bool is_comonotone(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("co-monotonicity needs equal-length columns");
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (y[order[k]] < y[order[k - 1]]) return false;
  }
  return true;
}

namespace {

// A random nondecreasing map of [0,1).
std::function<double(double)> random_monotone_map(Rng& rng) {
  switch (rng.index(5)) {
    case 0: {
      const double a = rng.uniform(0.0, 20.0), b = rng.uniform(-10.0, 10.0);
      return [a, b](double u) { return a * u + b; };
    }
    case 1: {
      const double a = rng.uniform(0.5, 10.0), b = rng.uniform(-5.0, 5.0);
      const double steps = static_cast<double>(rng.integer(2, 6));
      return [a, b, steps](double u) { return a * std::floor(steps * u) + b; };
    }
    case 2: {
      const double c = rng.uniform(-10.0, 10.0);
      return [c](double) { return c; };
    }
    case 3: {
      const double a = rng.uniform(1.0, 30.0), k = rng.uniform(0.05, 0.95);
      return [a, k](double u) { return u < k ? -a * (k - u) : 0.0; };
    }
    default: {
      const double a = rng.uniform(0.5, 3.0), b = rng.uniform(-8.0, 2.0);
      return [a, b](double u) { return std::exp(a * u) + b; };
    }
  }
}

}  // namespace

std::pair<EmpiricalDistribution, EmpiricalDistribution> comonotone_pair(Rng& rng, std::size_t n) {
  if (n == 0) throw DomainError("comonotone_pair requires n >= 1");
  const auto f = random_monotone_map(rng);
  const auto g = random_monotone_map(rng);
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    xs[i] = f(u);
    ys[i] = g(u);
  }
  return {EmpiricalDistribution(std::move(xs)), EmpiricalDistribution(std::move(ys))};
}

}  // namespace riskc
