#include "riskc/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riskc/compose.hpp"
#include "riskc/deviation_measures.hpp"
#include "riskc/errors.hpp"
#include "riskc/generators.hpp"
#include "riskc/report_json.hpp"
#include "riskc/risk_measures.hpp"

namespace riskc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double weighted_sum(const EmpiricalDistribution& d, const std::vector<double>& v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += d.weights()[i] * v[i];
  return acc;
}

double conjugate(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInfinity;
  return p / (p - 1.0);
}

double weighted_norm(const EmpiricalDistribution& d, const std::vector<double>& v, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += d.weights()[i] * std::pow(std::abs(v[i]), q);
  return std::pow(acc, 1.0 / q);
}

// W <= 0 with ||W||_q = 1 attaining E[W * (-s)] = ||s||_p for s >= 0; zero
// when s vanishes.
std::vector<double> norm_dual(const EmpiricalDistribution& d, const std::vector<double>& s, double p) {
  const std::size_t n = s.size();
  std::vector<double> w(n, 0.0);
  const auto top = std::max_element(s.begin(), s.end());
  if (top == s.end() || *top <= 0.0) return w;
  if (std::isinf(p)) {
    const auto i = static_cast<std::size_t>(top - s.begin());
    w[i] = -1.0 / d.weights()[i];
    return w;
  }
  if (p == 1.0) {
    for (std::size_t i = 0; i < n; ++i) w[i] = s[i] > 0.0 ? -1.0 : 0.0;
    return w;
  }
  // Scale by the largest entry first so the powers stay in range.
  const double scale = *top;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += d.weights()[i] * std::pow(s[i] / scale, p);
  const double norm = std::pow(acc, 1.0 / p);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] > 0.0) w[i] = -std::pow(s[i] / scale / norm, p - 1.0);
  }
  return w;
}

std::vector<double> es_density(const EmpiricalDistribution& d, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0,1], got " + std::to_string(alpha));
  }
  std::vector<double> q(d.size(), 0.0);
  double remaining = alpha;
  for (std::size_t k = 0; k < d.size() && remaining > 0.0; ++k) {
    const std::size_t i = d.sorted().permutation[k];
    const double w = d.weights()[i];
    const double take = std::min(w, remaining);
    q[i] = take / (w * alpha);
    remaining -= take;
  }
  return q;
}

std::vector<double> worst_case_density(const EmpiricalDistribution& d) {
  std::vector<double> q(d.size(), 0.0);
  const std::size_t i = d.sorted().permutation[0];
  q[i] = 1.0 / d.weights()[i];
  return q;
}

DualDensity density_only(std::vector<double> q) {
  DualDensity out;
  out.density = std::move(q);
  return out;
}

void fill_residuals(const EmpiricalDistribution& d, DualWitnessReport& r) {
  const DensityCheck c = check_density(d, r.density);
  r.residuals.emplace_back("min_density", c.min_value);
  r.residuals.emplace_back("max_density", c.max_value);
  r.residuals.emplace_back("mass_residual", c.mass_residual);
  r.gap = std::abs(r.primal - r.dual);
  r.degenerate = d.is_constant();
}

DualWitnessReport finish(const EmpiricalDistribution& d, double primal, DualDensity q,
                         double offset = 0.0) {
  DualWitnessReport r;
  r.primal = primal;
  r.dual = expected_loss_under(d, q.density) - q.penalty.value_or(0.0) + offset;
  r.density = std::move(q);
  fill_residuals(d, r);
  return r;
}

void require_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("beta must lie in [0,1], got " + std::to_string(beta));
  }
}

void require_p(double p) {
  if (!(p >= 1.0)) throw DomainError("p must be >= 1, got " + std::to_string(p));
}

// Density of the dual set of a deviation (or of a risk measure): the
// represented value is E_Q[-X] - penalty, plus E[X] for deviations.
DualDensity witness_density(const MeasureSpec& spec, const EmpiricalDistribution& d);

DualDensity scale_deviation_density(const DualDensity& q, double beta) {
  DualDensity out = q;
  for (auto& v : out.density) v = 1.0 + beta * (v - 1.0);
  if (out.penalty) *out.penalty *= beta;
  return out;
}

DualDensity ld_density(const EmpiricalDistribution& d, const MeasureSpec& rho, double beta,
                       double p, double* w_norm) {
  const DualDensity q_rho = witness_density(rho, d);
  const double value = evaluate(rho, d);
  std::vector<double> s(d.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::max(-value - d.outcomes()[i], 0.0);
  const auto w = norm_dual(d, s, p);
  if (w_norm) *w_norm = weighted_norm(d, w, conjugate(p));
  const double ew = weighted_sum(d, w);
  DualDensity q;
  q.density.resize(d.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    q.density[i] = q_rho.density[i] * (1.0 + beta * ew) - beta * w[i];
  }
  if (q_rho.penalty) q.penalty = (1.0 + beta * ew) * *q_rho.penalty;
  return q;
}

DualDensity semidev_density(const EmpiricalDistribution& d, double p, double beta, double* w_norm) {
  const double mean = expectation(d);
  std::vector<double> s(d.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::max(mean - d.outcomes()[i], 0.0);
  const auto w = norm_dual(d, s, p);
  if (w_norm) *w_norm = weighted_norm(d, w, conjugate(p));
  const double ew = weighted_sum(d, w);
  DualDensity q;
  q.density.resize(d.size());
  for (std::size_t i = 0; i < s.size(); ++i) q.density[i] = 1.0 + beta * (ew - w[i]);
  return q;
}

DualDensity entropic_density(const EmpiricalDistribution& d, double theta) {
  const double low = essential_inf(d);
  std::vector<double> e(d.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::exp(-theta * (d.outcomes()[i] - low));
  const double z = weighted_sum(d, e);
  const double log_z = std::log(z);
  DualDensity q;
  q.density.resize(d.size());
  double entropy = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    q.density[i] = e[i] / z;
    if (q.density[i] > 0.0) {
      entropy += d.weights()[i] * q.density[i] * (-theta * (d.outcomes()[i] - low) - log_z);
    }
  }
  q.penalty = entropy / theta;
  return q;
}

DualDensity witness_density(const MeasureSpec& spec, const EmpiricalDistribution& d) {
  return std::visit(
      overloaded{
          [&](const node::NegExpectation&) { return density_only(std::vector<double>(d.size(), 1.0)); },
          [&](const node::ExpectedShortfall& n) { return density_only(es_density(d, n.alpha)); },
          [&](const node::WorstCase&) { return density_only(worst_case_density(d)); },
          [&](const node::Spectral& n) {
            DualDensity q = density_only(std::vector<double>(d.size(), 0.0));
            const auto& m = n.spectrum;
            for (std::size_t j = 0; j < m.alphas().size(); ++j) {
              const auto part = es_density(d, m.alphas()[j]);
              for (std::size_t i = 0; i < part.size(); ++i) q.density[i] += m.masses()[j] * part[i];
            }
            return q;
          },
          [&](const node::Entropic& n) { return entropic_density(d, n.theta); },
          [&](const node::ValueAtRisk&) -> DualDensity {
            throw ConfigurationError("value at risk has no dual representation");
          },
          [&](const node::FullDeviation&) -> DualDensity {
            throw ConfigurationError(
                "the full p-deviation has no dual set of probability densities");
          },
          [&](const node::LowerSemideviation& n) { return semidev_density(d, n.p, 1.0, nullptr); },
          [&](const node::InducedDeviation& n) { return witness_density(*n.rho, d); },
          [&](const node::RangeDeviation&) { return density_only(worst_case_density(d)); },
          [&](const node::Composition& n) {
            const DualDensity q_rho = witness_density(*n.rho, d);
            const DualDensity q_dev = scale_deviation_density(witness_density(*n.dev, d), n.beta);
            return composed_dual_density(d, q_rho, q_dev);
          },
          [&](const node::LossDeviation& n) { return ld_density(d, *n.rho, n.beta, n.p, nullptr); },
      },
      spec.node());
}

}  // namespace

DensityCheck check_density(const EmpiricalDistribution& d, const DualDensity& q, double tolerance) {
  DensityCheck c;
  if (q.density.size() != d.size()) return c;
  c.min_value = *std::min_element(q.density.begin(), q.density.end());
  c.max_value = *std::max_element(q.density.begin(), q.density.end());
  c.mass_residual = std::abs(weighted_sum(d, q.density) - 1.0);
  c.valid = c.min_value >= -tolerance && c.mass_residual <= tolerance && std::isfinite(c.max_value);
  return c;
}

double expected_loss_under(const EmpiricalDistribution& d, const std::vector<double>& density) {
  double acc = 0.0;
  for (std::size_t i = 0; i < density.size(); ++i) {
    acc -= d.weights()[i] * density[i] * d.outcomes()[i];
  }
  return acc;
}

DualWitnessReport es_dual_witness(const EmpiricalDistribution& d, double alpha) {
  DualDensity q = density_only(es_density(d, alpha));
  return finish(d, expected_shortfall(d, alpha), std::move(q));
}

DualWitnessReport semidev_dual_witness(const EmpiricalDistribution& d, double p, double beta) {
  require_p(p);
  require_beta(beta);
  double w_norm = 0.0;
  DualDensity q = semidev_density(d, p, beta, &w_norm);
  const double primal = -expectation(d) + beta * lower_p_semideviation(d, p);
  auto r = finish(d, primal, std::move(q));
  r.residuals.emplace_back("w_dual_norm", w_norm);
  return r;
}

DualWitnessReport entropic_dual_witness(const EmpiricalDistribution& d, double theta) {
  if (!(theta > 0.0)) throw DomainError("theta must be > 0");
  DualDensity q = entropic_density(d, theta);
  auto r = finish(d, entropic_risk(d, theta), std::move(q));
  r.residuals.emplace_back("penalty", *r.density.penalty);
  return r;
}

DualDensity composed_dual_density(const EmpiricalDistribution& d, const DualDensity& q_rho,
                                  const DualDensity& q_dev) {
  if (q_rho.density.size() != d.size() || q_dev.density.size() != d.size()) {
    throw InvalidPairError("densities do not match the number of atoms");
  }
  DualDensity out;
  out.density.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.density[i] = q_rho.density[i] + q_dev.density[i] - 1.0;
    if (out.density[i] < -1e-12) {
      throw InvalidPairError("composed density is negative at atom " + std::to_string(i) + " (" +
                             std::to_string(out.density[i]) + ")");
    }
  }
  const double mass = weighted_sum(d, out.density);
  if (std::abs(mass - 1.0) > 1e-9) {
    throw InvalidPairError("composed density has mass " + std::to_string(mass));
  }
  if (q_rho.penalty || q_dev.penalty) {
    out.penalty = q_rho.penalty.value_or(0.0) + q_dev.penalty.value_or(0.0);
  }
  return out;
}

DualWitnessReport loss_deviation_witness(const EmpiricalDistribution& d, const MeasureSpec& rho,
                                         double beta, double p) {
  require_p(p);
  require_beta(beta);
  double w_norm = 0.0;
  DualDensity q = ld_density(d, rho, beta, p, &w_norm);
  auto r = finish(d, loss_deviation(d, rho, beta, p), std::move(q));
  r.residuals.emplace_back("w_dual_norm", w_norm);
  r.residuals.emplace_back("density_q_norm", weighted_norm(d, r.density.density, conjugate(p)));
  return r;
}

DualWitnessReport analytic_witness(const MeasureSpec& spec, const EmpiricalDistribution& d) {
  DualDensity q = witness_density(spec, d);
  const double offset = spec.role() == Role::deviation ? expectation(d) : 0.0;
  return finish(d, evaluate(spec, d), std::move(q), offset);
}

std::optional<std::vector<double>> ConstraintSet::coords_of(const EmpiricalDistribution&,
                                                            const std::vector<double>& density) const {
  return density;
}

namespace {

// Largest tau-shift solving sum_i w_i f(y_i - tau) = target for a
// nondecreasing clip f, by bisection.
template <class Clip>
std::vector<double> shift_to_mass(const EmpiricalDistribution& d, const std::vector<double>& y,
                                  Clip clip, double lo, double hi, double target) {
  const auto mass = [&](double tau) {
    double acc = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) acc += d.weights()[i] * clip(y[i] - tau);
    return acc;
  };
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (mass(mid) >= target ? lo : hi) = mid;
  }
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = clip(y[i] - lo);
  return out;
}

class BoxSimplex final : public ConstraintSet {
 public:
  explicit BoxSimplex(double cap) : cap_(cap) {}
  std::string name() const override {
    return std::isinf(cap_) ? "probability_densities" : "bounded_densities";
  }
  std::vector<double> project(const EmpiricalDistribution& d, std::vector<double> y) const override {
    if (cap_ < 1.0) throw ConfigurationError("density cap below 1 leaves no feasible density");
    const double top = *std::max_element(y.begin(), y.end());
    const double bottom = *std::min_element(y.begin(), y.end());
    const double cap = cap_;
    const auto clip = [cap](double v) { return std::clamp(v, 0.0, cap); };
    const double lo = bottom - (std::isinf(cap) ? 1.0 : cap) - 1.0;
    return shift_to_mass(d, y, clip, lo, top, 1.0);
  }
  std::vector<double> density_of(const EmpiricalDistribution&, const std::vector<double>& c) const override {
    return c;
  }
  std::vector<double> gradient(const EmpiricalDistribution& d) const override {
    std::vector<double> g(d.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = -d.outcomes()[i];
    return g;
  }
  std::vector<double> random_start(const EmpiricalDistribution& d, Rng& rng) const override {
    std::vector<double> y(d.size());
    for (auto& v : y) v = rng.uniform(0.0, std::min(cap_, 4.0));
    return y;
  }
  bool contains(const EmpiricalDistribution& d, const std::vector<double>& q, double tol) const override {
    if (q.size() != d.size()) return false;
    for (double v : q) {
      if (v < -tol || v > cap_ + tol) return false;
    }
    return std::abs(weighted_sum(d, q) - 1.0) <= tol;
  }

 private:
  double cap_;
};

class Singleton final : public ConstraintSet {
 public:
  std::string name() const override { return "reference_measure"; }
  std::vector<double> project(const EmpiricalDistribution& d, std::vector<double>) const override {
    return std::vector<double>(d.size(), 1.0);
  }
  std::vector<double> density_of(const EmpiricalDistribution&, const std::vector<double>& c) const override {
    return c;
  }
  std::vector<double> gradient(const EmpiricalDistribution& d) const override {
    return std::vector<double>(d.size(), 0.0);
  }
  std::vector<double> random_start(const EmpiricalDistribution& d, Rng&) const override {
    return std::vector<double>(d.size(), 1.0);
  }
  bool contains(const EmpiricalDistribution& d, const std::vector<double>& q, double tol) const override {
    if (q.size() != d.size()) return false;
    return std::all_of(q.begin(), q.end(), [tol](double v) { return std::abs(v - 1.0) <= tol; });
  }
};

// Search coordinates are W itself.
class SemideviationSet final : public ConstraintSet {
 public:
  SemideviationSet(double beta, double p) : beta_(beta), p_(p), q_(conjugate(p)) {
    require_beta(beta);
    require_p(p);
  }
  std::string name() const override { return "semideviation_densities"; }
  std::vector<double> project(const EmpiricalDistribution& d, std::vector<double> y) const override {
    for (auto& v : y) v = std::min(v, 0.0);
    if (std::isinf(q_)) {
      for (auto& v : y) v = std::max(v, -1.0);
      return y;
    }
    const double norm = weighted_norm(d, y, q_);
    if (norm <= 1.0) return y;
    if (q_ == 1.0) {
      const auto clip = [](double v) { return -std::min(v, 0.0); };
      // Mass of -min(y + tau, 0) falls as tau grows; search on -y instead.
      std::vector<double> neg(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) neg[i] = -y[i];
      const double top = *std::max_element(neg.begin(), neg.end());
      auto out = shift_to_mass(d, neg, [](double v) { return std::max(v, 0.0); }, 0.0, top, 1.0);
      (void)clip;
      for (auto& v : out) v = -v;
      return out;
    }
    for (auto& v : y) v /= norm;
    return y;
  }
  std::vector<double> density_of(const EmpiricalDistribution& d, const std::vector<double>& w) const override {
    const double ew = weighted_sum(d, w);
    std::vector<double> q(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) q[i] = 1.0 + beta_ * (ew - w[i]);
    return q;
  }
  std::vector<double> gradient(const EmpiricalDistribution& d) const override {
    const double mean = expectation(d);
    std::vector<double> g(d.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = beta_ * (d.outcomes()[i] - mean);
    return g;
  }
  std::vector<double> random_start(const EmpiricalDistribution& d, Rng& rng) const override {
    std::vector<double> y(d.size());
    for (auto& v : y) v = rng.coin(0.5) ? -rng.uniform(0.0, 2.0) : 0.0;
    return y;
  }
  std::optional<std::vector<double>> coords_of(const EmpiricalDistribution&,
                                               const std::vector<double>& density) const override {
    if (beta_ == 0.0) return std::nullopt;
    const double low = *std::min_element(density.begin(), density.end());
    std::vector<double> w(density.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = (low - density[i]) / beta_;
    return w;
  }
  bool contains(const EmpiricalDistribution& d, const std::vector<double>& density, double tol) const override {
    if (density.size() != d.size()) return false;
    if (beta_ == 0.0) return Singleton().contains(d, density, tol);
    const auto w = *coords_of(d, density);
    if (weighted_norm(d, w, q_) > 1.0 + tol) return false;
    const auto back = density_of(d, w);
    for (std::size_t i = 0; i < back.size(); ++i) {
      if (std::abs(back[i] - density[i]) > tol) return false;
    }
    return true;
  }

 private:
  double beta_;
  double p_;
  double q_;
};

}  // namespace

std::unique_ptr<ConstraintSet> box_simplex_set(double cap) { return std::make_unique<BoxSimplex>(cap); }
std::unique_ptr<ConstraintSet> singleton_set() { return std::make_unique<Singleton>(); }
std::unique_ptr<ConstraintSet> semideviation_set(double beta, double p) {
  return std::make_unique<SemideviationSet>(beta, p);
}

SearchResult brute_force_sup(const EmpiricalDistribution& d, const ConstraintSet& set,
                             const SearchOptions& options, const std::vector<double>* warm_start) {
  const auto g = set.gradient(d);
  double gmax = 0.0;
  for (double v : g) gmax = std::max(gmax, std::abs(v));
  const auto value_of = [&](const std::vector<double>& c) {
    return expected_loss_under(d, set.density_of(d, c));
  };
  const auto ascend = [&](std::vector<double> c) {
    c = set.project(d, std::move(c));
    double best = value_of(c);
    double step = gmax > 0.0 ? 1.0 / gmax : 0.0;
    for (std::size_t it = 0; it < options.iterations && step > 0.0; ++it) {
      std::vector<double> trial(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) trial[i] = c[i] + step * g[i];
      trial = set.project(d, std::move(trial));
      const double v = value_of(trial);
      if (v > best) {
        best = v;
        c = std::move(trial);
        step *= 2.0;
      } else {
        step *= 0.5;
        if (step * gmax < 1e-14) break;
      }
    }
    return std::pair{best, std::move(c)};
  };

  SearchResult result;
  result.value = -kInfinity;
  result.random_start_value = -kInfinity;
  std::vector<double> best_coords;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    Rng rng(derive_seed(options.seed, r));
    auto [v, c] = ascend(set.random_start(d, rng));
    ++result.starts;
    result.random_start_value = std::max(result.random_start_value, v);
    if (v > result.value) {
      result.value = v;
      best_coords = std::move(c);
    }
  }
  if (warm_start) {
    if (const auto coords = set.coords_of(d, *warm_start)) {
      auto [v, c] = ascend(*coords);
      ++result.starts;
      if (v > result.value) {
        result.value = v;
        best_coords = std::move(c);
      }
    }
  }
  if (best_coords.empty()) throw ConfigurationError("no feasible start for " + set.name());
  result.density.density = set.density_of(d, best_coords);
  result.density.provenance = Provenance::search;
  return result;
}

KusuokaReport kusuoka_consistency(const MeasureSpec& spec, std::size_t atoms,
                                  std::size_t validation, std::uint64_t seed) {
  if (spec.role() != Role::risk) {
    throw ConfigurationError("spectrum recovery applies to risk measures, not " + spec.label());
  }
  if (atoms == 0) throw DomainError("spectrum recovery needs at least one atom");
  const std::size_t n = atoms;
  KusuokaReport r;
  r.atoms = n;
  // v[k] = F(X^(k)), X^(k) = -1 on the k lowest atoms (all atoms are equally
  // likely, so "lowest" is just the first k).
  std::vector<double> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<double> x(n, 0.0);
    std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k), -1.0);
    v[k] = evaluate(spec, EmpiricalDistribution(std::move(x)));
  }
  std::vector<double> delta(n + 2, 0.0);
  for (std::size_t k = 1; k <= n; ++k) delta[k] = v[k] - v[k - 1];
  r.levels.resize(n);
  r.masses.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    r.levels[k - 1] = static_cast<double>(k) / static_cast<double>(n);
    r.masses[k - 1] = static_cast<double>(k) * (delta[k] - delta[k + 1]);
  }
  r.most_negative_mass = std::min(0.0, *std::min_element(r.masses.begin(), r.masses.end()));

  const auto model = [&](const EmpiricalDistribution& d) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (r.masses[k] != 0.0) acc += r.masses[k] * expected_shortfall(d, r.levels[k]);
    }
    return acc;
  };
  bool reproduces = true;
  for (std::size_t t = 0; t < validation; ++t) {
    Rng rng(derive_seed(seed, t));
    const EmpiricalDistribution d(draw_outcomes(rng, draw_family(rng), n));
    const double f = evaluate(spec, d);
    const double diff = std::abs(f - model(d));
    r.max_discrepancy = std::max(r.max_discrepancy, diff);
    if (diff > 1e-9 * std::max(1.0, std::abs(f))) reproduces = false;
  }
  r.validation_size = validation;
  if (r.most_negative_mass < -1e-9) {
    r.verdict = "not co-monotone coherent: recovered spectrum has negative mass";
  } else if (!reproduces) {
    r.verdict = "not co-monotone coherent: no spectrum on this space reproduces the functional";
  } else {
    r.comonotone_coherent = true;
    r.verdict = "recovered spectrum reproduces the functional";
  }
  return r;
}

nlohmann::ordered_json to_json(const DualWitnessReport& r) {
  nlohmann::ordered_json j;
  j["primal"] = number_or_inf(r.primal);
  j["dual"] = number_or_inf(r.dual);
  j["gap"] = number_or_inf(r.gap);
  j["degenerate"] = r.degenerate;
  nlohmann::ordered_json density;
  density["provenance"] = r.density.provenance == Provenance::analytic ? "analytic" : "search";
  density["values"] = r.density.density;
  if (r.density.penalty) density["penalty"] = *r.density.penalty;
  j["density"] = std::move(density);
  nlohmann::ordered_json res;
  for (const auto& [k, v] : r.residuals) res[k] = number_or_inf(v);
  j["residuals"] = std::move(res);
  return j;
}

nlohmann::ordered_json to_json(const KusuokaReport& r) {
  nlohmann::ordered_json j;
  j["atoms"] = r.atoms;
  j["levels"] = r.levels;
  j["masses"] = r.masses;
  j["most_negative_mass"] = r.most_negative_mass;
  j["max_discrepancy"] = r.max_discrepancy;
  j["validation_size"] = r.validation_size;
  j["comonotone_coherent"] = r.comonotone_coherent;
  j["verdict"] = r.verdict;
  return j;
}

}  // namespace riskc
