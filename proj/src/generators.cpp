#include "riskc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace riskc {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::symmetric_two_point: return "symmetric_two_point";
    case Family::right_skew: return "right_skew";
    case Family::left_skew: return "left_skew";
    case Family::uniform_grid: return "uniform_grid";
    case Family::adversarial_tail: return "adversarial_tail";
    case Family::gaussian_like: return "gaussian_like";
    case Family::integers: return "integers";
    case Family::constant: return "constant";
  }
  return "unknown";
}

Family draw_family(Rng& rng) { return kFamilies[rng.index(kFamilies.size())]; }

std::size_t draw_dim(Rng& rng, std::size_t max_dim) {
  max_dim = std::max<std::size_t>(max_dim, 1);
  const double r = rng.uniform();
  const std::size_t cap = r < 0.5 ? std::min<std::size_t>(max_dim, 8)
                          : r < 0.8 ? std::min<std::size_t>(max_dim, 24)
                                    : max_dim;
  return 1 + rng.index(cap);
}

std::vector<double> draw_outcomes(Rng& rng, Family family, std::size_t n) {
  std::vector<double> xs(n);
  const double scale = std::exp(rng.uniform(std::log(0.1), std::log(50.0)));
  const double base = rng.coin(0.5) ? 0.0 : rng.uniform(-5.0, 5.0) * scale;
  switch (family) {
    case Family::symmetric_two_point: {
      const double a = scale * rng.uniform(0.1, 1.0);
      for (auto& x : xs) x = rng.coin() ? base + a : base - a;
      break;
    }
    case Family::right_skew:
    case Family::left_skew: {
      const double sign = family == Family::right_skew ? 1.0 : -1.0;
      std::fill(xs.begin(), xs.end(), base);
      const std::size_t spikes = 1 + (n > 4 && rng.coin(0.3) ? rng.index(n / 4) : 0);
      for (std::size_t k = 0; k < spikes; ++k) {
        xs[rng.index(n)] = base + sign * scale * rng.uniform(1.0, 20.0);
      }
      break;
    }
    case Family::uniform_grid: {
      const double step = scale * rng.uniform(0.05, 1.0);
      for (std::size_t i = 0; i < n; ++i) xs[i] = base + step * static_cast<double>(i);
      rng.shuffle(xs);
      break;
    }
    case Family::adversarial_tail: {
      // A block of atoms pinned at the minimum with variation above it.
      const std::size_t k = n == 1 ? 1 : 1 + rng.index(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        xs[i] = i < k ? base : base + scale * rng.uniform(0.01, 1.0);
      }
      rng.shuffle(xs);
      break;
    }
    case Family::gaussian_like:
      for (auto& x : xs) x = base + scale * rng.normal();
      break;
    case Family::integers:
      for (auto& x : xs) x = static_cast<double>(rng.integer(-5, 5));
      break;
    case Family::constant:
      std::fill(xs.begin(), xs.end(), rng.coin(0.3) ? 0.0 : base);
      break;
  }
  return xs;
}

std::vector<double> draw_weights(Rng& rng, std::size_t n) {
  std::vector<double> ws(n);
  double total = 0.0;
  for (auto& w : ws) total += (w = rng.uniform(0.05, 1.0));
  for (auto& w : ws) w /= total;
  const double head = std::accumulate(ws.begin(), ws.end() - 1, 0.0);
  ws.back() = 1.0 - head;
  return ws;
}

EmpiricalDistribution make_distribution(std::vector<double> outcomes,
                                        const std::vector<double>& weights) {
  if (weights.empty()) return EmpiricalDistribution(std::move(outcomes));
  return EmpiricalDistribution(std::move(outcomes), weights);
}

std::vector<double> contract(Rng& rng, const std::vector<double>& outcomes,
                             const std::vector<double>& weights) {
  const std::size_t n = outcomes.size();
  const auto weight = [&](std::size_t i) {
    return weights.empty() ? 1.0 / static_cast<double>(n) : weights[i];
  };
  std::vector<std::size_t> group(n);
  const std::size_t groups = 1 + rng.index(n);
  for (auto& g : group) g = rng.index(groups);
  std::vector<double> mass(groups, 0.0), moment(groups, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    mass[group[i]] += weight(i);
    moment[group[i]] += weight(i) * outcomes[i];
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = moment[group[i]] / mass[group[i]];
  if (rng.coin(0.5)) {
    const double lift = rng.coin(0.5) ? rng.uniform(0.0, 1.0) : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.coin(0.5)) out[i] += lift * rng.uniform();
    }
  }
  return out;
}

}  // namespace riskc
