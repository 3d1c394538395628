#include "riskc/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riskc/compose.hpp"
#include "riskc/errors.hpp"
#include "riskc/generators.hpp"
#include "riskc/parallel.hpp"
#include "riskc/report_json.hpp"

namespace riskc {

namespace {

constexpr std::size_t kBlock = 2048;

bool is_composite(const MeasureSpec& spec) {
  return std::holds_alternative<node::Composition>(spec.node()) ||
         std::holds_alternative<node::LossDeviation>(spec.node());
}

double widened(double tolerance, double lhs, double rhs) {
  return tolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

std::vector<double> plus(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

double draw_shift(Rng& rng) {
  if (rng.coin(0.3)) return static_cast<double>(rng.integer(-10, 10));
  return rng.uniform(-100.0, 100.0) * (rng.coin(0.5) ? 1.0 : 0.01);
}

double draw_mixing_weight(Rng& rng) {
  static constexpr double kGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  return rng.coin(0.5) ? kGrid[rng.index(5)] : rng.uniform();
}

double draw_scale(Rng& rng) {
  static constexpr double kGrid[] = {0.0, 0.5, 2.0, 10.0};
  return rng.coin(0.5) ? kGrid[rng.index(4)] : rng.uniform(0.0, 20.0);
}

std::vector<double> nonnegative_increment(Rng& rng, std::size_t n, std::string& family) {
  const Family g = draw_family(rng);
  family += "+" + std::string(to_string(g));
  auto z = draw_outcomes(rng, g, n);
  const double low = *std::min_element(z.begin(), z.end());
  for (auto& v : z) v = std::max(v - low, 0.0);
  if (rng.coin(0.3)) {
    for (auto& v : z) {
      if (rng.coin(0.5)) v = 0.0;
    }
  }
  return z;
}

// y is a nondecreasing rearrangement of v along the order of x.
std::vector<double> comonotone_with(const std::vector<double>& x, std::vector<double> v) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  std::sort(v.begin(), v.end());
  std::vector<double> y(x.size());
  for (std::size_t k = 0; k < order.size(); ++k) y[order[k]] = v[k];
  return y;
}

std::string describe(const char* what, Axiom a, const MeasureSpec& spec) {
  return std::string(what) + " " + std::string(to_string(a)) + " does not apply to " +
         (spec.role() == Role::risk ? "risk measure " : "deviation measure ") + spec.label();
}

}  // namespace

EmpiricalDistribution Instance::dist_x() const { return make_distribution(x, weights); }
EmpiricalDistribution Instance::dist_y() const { return make_distribution(y, weights); }

bool applicable(const MeasureSpec& spec, Axiom axiom) {
  using A = Axiom;
  if (axiom == A::fatou_continuity) return false;
  if (spec.role() == Role::risk) {
    switch (axiom) {
      case A::translation_insensitivity:
      case A::non_negativity:
        return false;
      case A::lower_range_dominance:
        return is_composite(spec);
      default:
        return true;
    }
  }
  switch (axiom) {
    case A::monotonicity:
    case A::translation_invariance:
    case A::limitedness:
    case A::ssd_consistency:
      return false;
    default:
      return true;
  }
}

void require_applicable(const MeasureSpec& spec, Axiom axiom) {
  if (axiom == Axiom::fatou_continuity) {
    throw ConfigurationError("fatou_continuity is not testable on finite scenario spaces");
  }
  if (!applicable(spec, axiom)) throw ConfigurationError(describe("axiom", axiom, spec));
}

Instance generate_instance(Axiom axiom, Rng& rng, std::size_t max_dim) {
  using A = Axiom;
  Instance inst;
  const std::size_t n = draw_dim(rng, max_dim);
  if (axiom != A::law_invariance && n > 1 && rng.coin(0.25)) inst.weights = draw_weights(rng, n);
  const Family f = draw_family(rng);
  inst.family = std::string(to_string(f));
  inst.x = draw_outcomes(rng, f, n);

  switch (axiom) {
    case A::monotonicity: {
      if (rng.coin(0.15)) {
        std::fill(inst.x.begin(), inst.x.end(), 0.0);
        inst.family = "zero";
      }
      inst.y = plus(inst.x, nonnegative_increment(rng, n, inst.family));
      break;
    }
    case A::translation_invariance:
    case A::translation_insensitivity:
      inst.scalar = draw_shift(rng);
      break;
    case A::subadditivity:
    case A::convexity: {
      const Family g = draw_family(rng);
      inst.family += "+" + std::string(to_string(g));
      const double r = rng.uniform();
      if (r < 0.2) {
        // Partial hedge: the second column offsets the first.
        const double a = rng.uniform(0.2, 1.5);
        inst.y.resize(n);
        for (std::size_t i = 0; i < n; ++i) inst.y[i] = -a * inst.x[i] + 0.1 * rng.normal();
        inst.family += "/hedge";
      } else if (r < 0.3) {
        inst.y = inst.x;
        rng.shuffle(inst.y);
        inst.family += "/shuffle";
      } else {
        inst.y = draw_outcomes(rng, g, n);
      }
      if (axiom == A::convexity) inst.scalar = draw_mixing_weight(rng);
      break;
    }
    case A::positive_homogeneity:
      inst.scalar = draw_scale(rng);
      break;
    case A::law_invariance:
      inst.y = inst.x;
      rng.shuffle(inst.y);
      break;
    case A::comonotonic_additivity: {
      if (rng.coin(0.3)) {
        auto [a, b] = comonotone_pair(rng, n);
        inst.x.assign(a.outcomes().begin(), a.outcomes().end());
        inst.y.assign(b.outcomes().begin(), b.outcomes().end());
        inst.family = "monotone_maps";
      } else {
        const Family g = draw_family(rng);
        inst.family += "+" + std::string(to_string(g));
        inst.y = comonotone_with(inst.x, draw_outcomes(rng, g, n));
      }
      break;
    }
    case A::ssd_consistency: {
      // x is a contraction of the drawn column, which it dominates.
      inst.y = inst.x;
      const auto base = inst.dist_x();
      inst.x = inst.y;
      for (int attempt = 0; attempt < 4; ++attempt) {
        auto candidate = contract(rng, inst.y, inst.weights);
        if (ssd_dominates(make_distribution(candidate, inst.weights), base)) {
          inst.x = std::move(candidate);
          break;
        }
      }
      break;
    }
    case A::limitedness:
    case A::lower_range_dominance:
    case A::non_negativity:
    case A::fatou_continuity:
      break;
  }
  return inst;
}

bool precondition_holds(Axiom axiom, const Instance& inst) {
  using A = Axiom;
  const std::size_t n = inst.x.size();
  if (n == 0 || (!inst.weights.empty() && inst.weights.size() != n)) return false;
  const bool paired = axiom == A::monotonicity || axiom == A::subadditivity ||
                      axiom == A::convexity || axiom == A::law_invariance ||
                      axiom == A::comonotonic_additivity || axiom == A::ssd_consistency;
  if (paired && inst.y.size() != n) return false;
  switch (axiom) {
    case A::monotonicity:
      for (std::size_t i = 0; i < n; ++i) {
        if (inst.x[i] > inst.y[i]) return false;
      }
      return true;
    case A::convexity:
      return inst.scalar >= 0.0 && inst.scalar <= 1.0;
    case A::positive_homogeneity:
      return inst.scalar >= 0.0;
    case A::law_invariance: {
      if (!inst.weights.empty()) return false;
      auto a = inst.x, b = inst.y;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
    case A::comonotonic_additivity:
      return is_comonotone(inst.x, inst.y);
    case A::ssd_consistency:
      return ssd_dominates(inst.dist_x(), inst.dist_y());
    default:
      return true;
  }
}

Evaluation evaluate_instance(const MeasureSpec& spec, Axiom axiom, const Instance& inst,
                             double tolerance) {
  using A = Axiom;
  require_applicable(spec, axiom);
  const auto f = [&](const std::vector<double>& col) {
    return evaluate(spec, make_distribution(col, inst.weights));
  };
  Evaluation ev;
  bool equality = false;
  switch (axiom) {
    case A::monotonicity: {
      ev.lhs = f(inst.y);
      ev.rhs = f(inst.x);
      ev.values = {{"F(X)", ev.rhs}, {"F(Y)", ev.lhs}};
      break;
    }
    case A::translation_invariance:
    case A::translation_insensitivity: {
      std::vector<double> moved(inst.x);
      for (auto& v : moved) v += inst.scalar;
      const double base = f(inst.x);
      ev.lhs = f(moved);
      ev.rhs = axiom == A::translation_invariance ? base - inst.scalar : base;
      ev.values = {{"F(X)", base}, {"F(X+c)", ev.lhs}};
      equality = true;
      break;
    }
    case A::subadditivity:
    case A::comonotonic_additivity: {
      const double fx = f(inst.x), fy = f(inst.y);
      ev.lhs = f(plus(inst.x, inst.y));
      ev.rhs = fx + fy;
      ev.values = {{"F(X)", fx}, {"F(Y)", fy}, {"F(X+Y)", ev.lhs}};
      equality = axiom == A::comonotonic_additivity;
      break;
    }
    case A::positive_homogeneity: {
      std::vector<double> scaled(inst.x);
      for (auto& v : scaled) v *= inst.scalar;
      const double fx = f(inst.x);
      ev.lhs = f(scaled);
      ev.rhs = inst.scalar * fx;
      ev.values = {{"F(X)", fx}, {"F(lambda*X)", ev.lhs}};
      equality = true;
      break;
    }
    case A::convexity: {
      const double lambda = inst.scalar;
      std::vector<double> mixed(inst.x.size());
      for (std::size_t i = 0; i < mixed.size(); ++i) {
        mixed[i] = lambda * inst.x[i] + (1.0 - lambda) * inst.y[i];
      }
      const double fx = f(inst.x), fy = f(inst.y);
      ev.lhs = f(mixed);
      ev.rhs = lambda * fx + (1.0 - lambda) * fy;
      ev.values = {{"F(X)", fx}, {"F(Y)", fy}, {"F(mix)", ev.lhs}};
      break;
    }
    case A::law_invariance: {
      ev.lhs = f(inst.x);
      ev.rhs = f(inst.y);
      ev.values = {{"F(X)", ev.lhs}, {"F(Y)", ev.rhs}};
      equality = true;
      break;
    }
    case A::limitedness: {
      const auto d = inst.dist_x();
      ev.lhs = evaluate(spec, d);
      ev.rhs = -essential_inf(d);
      ev.values = {{"F(X)", ev.lhs}, {"-inf X", ev.rhs}};
      break;
    }
    case A::lower_range_dominance: {
      const auto d = inst.dist_x();
      ev.lhs = penalty_term(spec, d);
      ev.rhs = expectation(d) - essential_inf(d);
      ev.values = {{"D(X)", ev.lhs}, {"E[X]-inf X", ev.rhs}};
      break;
    }
    case A::non_negativity: {
      const auto d = inst.dist_x();
      const double dev = evaluate(spec, d);
      ev.values = {{"D(X)", dev}};
      if (d.is_constant()) {
        ev.lhs = dev;
        ev.rhs = 0.0;
        equality = true;
        break;
      }
      // Strictly positive for non-constant X: a value inside the tolerance
      // band counts as zero.
      ev.lhs = 0.0;
      ev.rhs = dev;
      ev.tolerance = widened(tolerance, 0.0, dev);
      ev.violation = ev.tolerance - dev;
      ev.violated = ev.violation >= 0.0;
      return ev;
    }
    case A::ssd_consistency: {
      ev.lhs = f(inst.x);
      ev.rhs = f(inst.y);
      ev.values = {{"F(X)", ev.lhs}, {"F(Y)", ev.rhs}};
      break;
    }
    case A::fatou_continuity:
      break;
  }
  ev.violation = equality ? std::abs(ev.lhs - ev.rhs) : ev.lhs - ev.rhs;
  ev.tolerance = widened(tolerance, ev.lhs, ev.rhs);
  ev.violated = ev.violation > ev.tolerance;
  return ev;
}

Instance shrink(const MeasureSpec& spec, Axiom axiom, Instance inst, double tolerance) {
  const auto remove = [&](const Instance& from, std::size_t i) -> std::optional<Instance> {
    if (from.size() <= 1) return std::nullopt;
    Instance out = from;
    out.x.erase(out.x.begin() + static_cast<std::ptrdiff_t>(i));
    if (axiom == Axiom::law_invariance) {
      // Drop a matching value from the permuted copy so the laws stay equal.
      const auto it = std::find(out.y.begin(), out.y.end(), from.x[i]);
      if (it == out.y.end()) return std::nullopt;
      out.y.erase(it);
    } else if (!out.y.empty()) {
      out.y.erase(out.y.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (!out.weights.empty()) {
      out.weights.erase(out.weights.begin() + static_cast<std::ptrdiff_t>(i));
      const double mass = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
      for (auto& w : out.weights) w /= mass;
      const double head = std::accumulate(out.weights.begin(), out.weights.end() - 1, 0.0);
      out.weights.back() = 1.0 - head;
      if (!(out.weights.back() > 0.0)) return std::nullopt;
    }
    return out;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      auto candidate = remove(inst, i);
      if (!candidate || !precondition_holds(axiom, *candidate)) continue;
      if (!evaluate_instance(spec, axiom, *candidate, tolerance).violated) continue;
      inst = std::move(*candidate);
      progress = true;
      break;
    }
  }
  return inst;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "unknown";
}

AxiomReport check_axiom(const MeasureSpec& spec, Axiom axiom, const HarnessOptions& options) {
  AxiomReport report;
  report.axiom = axiom;
  if (axiom == Axiom::fatou_continuity) {
    report.verdict = Verdict::skipped;
    report.note = "vacuous on finite scenario spaces: every bounded sequence has a convergent subsequence";
    return report;
  }
  require_applicable(spec, axiom);

  struct Outcome {
    double violation = 0.0;
    bool violated = false;
  };
  const auto instance_at = [&](std::size_t t) {
    Rng rng(derive_seed(options.seed, t));
    return generate_instance(axiom, rng, options.dim);
  };
  std::vector<Outcome> block(kBlock);
  std::optional<std::size_t> first_failure;
  double max_violation = 0.0;
  for (std::size_t start = 0; start < options.trials && !first_failure; start += kBlock) {
    const std::size_t end = std::min(options.trials, start + kBlock);
    parallel_for(start, end, [&](std::size_t t) {
      const Instance inst = instance_at(t);
      Outcome& out = block[t - start];
      out = Outcome{};
      if (!precondition_holds(axiom, inst)) return;
      const Evaluation ev = evaluate_instance(spec, axiom, inst, options.tolerance);
      out.violation = ev.violation;
      out.violated = ev.violated;
    });
    for (std::size_t t = start; t < end; ++t) {
      const Outcome& out = block[t - start];
      if (std::isfinite(out.violation)) max_violation = std::max(max_violation, out.violation);
      if (out.violated) {
        first_failure = t;
        break;
      }
    }
  }
  report.max_violation = max_violation;
  if (!first_failure) {
    report.trials = options.trials;
    return report;
  }
  report.verdict = Verdict::fail;
  report.trials = *first_failure + 1;
  Counterexample cx;
  cx.trial = *first_failure;
  const Instance original = instance_at(*first_failure);
  cx.atoms_before_shrink = original.size();
  cx.instance = shrink(spec, axiom, original, options.tolerance);
  cx.evaluation = evaluate_instance(spec, axiom, cx.instance, options.tolerance);
  if (!cx.evaluation.violated) {
    cx.instance = original;
    cx.evaluation = evaluate_instance(spec, axiom, original, options.tolerance);
  }
  report.max_violation = std::max(report.max_violation, cx.evaluation.violation);
  report.counterexample = std::move(cx);
  return report;
}

std::string_view to_string(FunctionalClass c) noexcept {
  switch (c) {
    case FunctionalClass::coherent: return "coherent";
    case FunctionalClass::convex: return "convex";
    case FunctionalClass::comonotone_coherent: return "comonotone_coherent";
    case FunctionalClass::generalized_deviation: return "generalized_deviation";
    case FunctionalClass::convex_deviation: return "convex_deviation";
  }
  return "unknown";
}

std::optional<FunctionalClass> parse_class(std::string_view tag) noexcept {
  for (auto c : {FunctionalClass::coherent, FunctionalClass::convex,
                 FunctionalClass::comonotone_coherent, FunctionalClass::generalized_deviation,
                 FunctionalClass::convex_deviation}) {
    if (to_string(c) == tag) return c;
  }
  return std::nullopt;
}

std::vector<Axiom> class_axioms(FunctionalClass c) {
  using A = Axiom;
  switch (c) {
    case FunctionalClass::coherent:
      return {A::monotonicity, A::translation_invariance, A::subadditivity, A::positive_homogeneity};
    case FunctionalClass::convex:
      return {A::monotonicity, A::translation_invariance, A::convexity};
    case FunctionalClass::comonotone_coherent:
      return {A::monotonicity, A::translation_invariance, A::subadditivity,
              A::positive_homogeneity, A::comonotonic_additivity};
    case FunctionalClass::generalized_deviation:
      return {A::non_negativity, A::translation_insensitivity, A::subadditivity,
              A::positive_homogeneity};
    case FunctionalClass::convex_deviation:
      return {A::non_negativity, A::translation_insensitivity, A::convexity};
  }
  return {};
}

std::vector<AxiomReport> check_class(const MeasureSpec& spec, FunctionalClass c,
                                     const HarnessOptions& options) {
  const bool deviation_class = c == FunctionalClass::generalized_deviation ||
                               c == FunctionalClass::convex_deviation;
  if (deviation_class != (spec.role() == Role::deviation)) {
    throw ConfigurationError("class " + std::string(to_string(c)) + " does not apply to " +
                             spec.label());
  }
  std::vector<AxiomReport> out;
  for (Axiom a : class_axioms(c)) out.push_back(check_axiom(spec, a, options));
  for (Axiom a : {Axiom::limitedness, Axiom::lower_range_dominance}) {
    if (!applicable(spec, a)) continue;
    auto r = check_axiom(spec, a, options);
    r.informational = true;
    out.push_back(std::move(r));
  }
  out.push_back(check_axiom(spec, Axiom::fatou_continuity, options));
  out.back().informational = true;
  return out;
}

bool bundle_passes(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) {
    return r.informational || r.verdict == Verdict::pass;
  });
}

std::vector<std::pair<std::string, MeasureSpec>> implication_catalog() {
  using M = MeasureSpec;
  const auto es3 = M::expected_shortfall(1.0 / 3.0);
  return {
      {"neg_expectation", M::neg_expectation()},
      {"worst_case", M::worst_case()},
      {"var_0.1", M::value_at_risk(0.1)},
      {"es_0.05", M::expected_shortfall(0.05)},
      {"es_1/3", es3},
      {"es_0.5", M::expected_shortfall(0.5)},
      {"spectral_mix", M::spectral(SpectralMeasure({0.1, 1.0}, {0.5, 0.5}))},
      {"entropic_1", M::entropic(1.0)},
      {"msd_minus_1_p2", M::mean_plus_semideviation(1.0, 2.0)},
      {"msd_minus_0.5_p1", M::mean_plus_semideviation(0.5, 1.0)},
      {"msd_minus_1_pinf", M::mean_plus_semideviation(1.0, kInfinity)},
      {"msd_full_1_p2", M::mean_plus_deviation(1.0, 2.0)},
      {"msd_full_0.3_pinf", M::mean_plus_deviation(0.3, kInfinity)},
      {"ld_es_0.1_b1_p2", M::loss_deviation(M::expected_shortfall(0.1), 1.0, 2.0)},
      {"ld_es_0.5_b0.5_pinf", M::loss_deviation(M::expected_shortfall(0.5), 0.5, kInfinity)},
      {"ld_entropic_1_b0.5_p1", M::loss_deviation(M::entropic(1.0), 0.5, 1.0)},
      {"es_1/3_plus_0.5_induced", M::compose(es3, M::induced(es3), 0.5)},
      {"mean_plus_0.5_induced_es_0.2",
       M::compose(M::neg_expectation(), M::induced(M::expected_shortfall(0.2)), 0.5)},
      {"es_0.25_plus_range", M::compose(M::expected_shortfall(0.25), M::range(), 1.0)},
      {"entropic_1_plus_0.5_semidev_p2",
       M::compose(M::entropic(1.0), M::lower_semideviation(2.0), 0.5)},
      {"worst_case_plus_0.2_semidev_p1",
       M::compose(M::worst_case(), M::lower_semideviation(1.0), 0.2)},
  };
}

ImplicationReport implication_suite(const HarnessOptions& options) {
  return implication_suite(implication_catalog(), options);
}

namespace {

constexpr const char* kMonotonicityFromLimits =
    "subadditivity or convexity with limitedness implies monotonicity";
constexpr const char* kLimitsFromMonotonicity =
    "translation invariance with monotonicity implies limitedness";
constexpr const char* kRangeFromComposition =
    "coherent or convex composition implies lower range dominance of its deviation";

struct TrialTally {
  std::size_t antecedent = 0;
  std::size_t violations = 0;
};

struct TrialOutcome {
  bool a1 = false, v1 = false, a2 = false, v2 = false, a3 = false, v3 = false;
};

// One instance, the three implications checked on it directly.
TrialOutcome implication_trial(const MeasureSpec& spec, bool composite, Rng& rng,
                               std::size_t max_dim, double tol) {
  TrialOutcome out;
  const std::size_t n = draw_dim(rng, max_dim);
  std::vector<double> weights;
  if (n > 1 && rng.coin(0.25)) weights = draw_weights(rng, n);
  std::string family(to_string(draw_family(rng)));
  auto x = draw_outcomes(rng, draw_family(rng), n);
  const auto z = nonnegative_increment(rng, n, family);
  const auto y = plus(x, z);

  const auto dx = make_distribution(x, weights);
  const auto dz = make_distribution(z, weights);
  const double fx = evaluate(spec, dx);
  const double fz = evaluate(spec, dz);
  const double fy = evaluate(spec, make_distribution(y, weights));
  const double rounding = 1e-15 * (std::abs(fx) + std::abs(fy) + std::abs(fz) + 1.0);

  // X + Z with Z >= 0: sub-additive on (X,Z) and limited at Z forces F(Y) <= F(X).
  const double e1 = widened(tol, fy, fx + fz);
  const double e2 = widened(tol, fz, essential_inf(dz));
  out.a1 = fy <= fx + fz + e1 && fz <= -essential_inf(dz) + e2;
  out.v1 = out.a1 && fy > fx + e1 + e2 + rounding;

  // inf X <= X: monotone on that pair and translation invariant at the
  // constant forces F(X) <= -inf X.
  const double c = essential_inf(dx);
  const double fc = evaluate(spec, EmpiricalDistribution::constant(c));
  const double f0 = evaluate(spec, EmpiricalDistribution::constant(0.0));
  const double m1 = widened(tol, fx, fc);
  const double m2 = widened(tol, fc, f0 - c);
  out.a2 = fx <= fc + m1 && std::abs(fc - (f0 - c)) <= m2;
  out.v2 = out.a2 && fx > -c + m1 + m2 + std::abs(f0) + rounding;

  if (composite) {
    // Limited at X with risk part above E[-X] bounds the penalty by the range.
    const double risk = risk_term(spec, dx);
    const double pen = penalty_term(spec, dx);
    const double mean = expectation(dx);
    const double l1 = widened(tol, fx, c);
    const double l2 = widened(tol, risk, mean);
    out.a3 = fx <= -c + l1 && risk >= -mean - l2;
    const double slack = 1e-15 * (std::abs(risk) + std::abs(pen) + std::abs(fx) + std::abs(c) + 1.0);
    out.v3 = out.a3 && pen > mean - c + l1 + l2 + slack;
  }
  return out;
}

}  // namespace

ImplicationReport implication_suite(const std::vector<std::pair<std::string, MeasureSpec>>& catalog,
                                    const HarnessOptions& options) {
  using A = Axiom;
  ImplicationReport report;
  report.trials = options.trials;
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const auto& [name, spec] = catalog[k];
    FunctionalImplications fi{name, spec, {}, {}};
    const bool composite = is_composite(spec);
    std::vector<A> axioms{A::monotonicity, A::translation_invariance, A::subadditivity,
                          A::convexity, A::positive_homogeneity, A::limitedness};
    if (composite) axioms.push_back(A::lower_range_dominance);
    for (A a : axioms) fi.observed.push_back(check_axiom(spec, a, options));
    const auto pass = [&](A a) {
      for (const auto& r : fi.observed) {
        if (r.axiom == a) return r.verdict == Verdict::pass;
      }
      return false;
    };

    std::vector<TrialOutcome> outcomes(options.trials);
    const std::uint64_t trial_seed = derive_seed(options.seed, 0x1000 + k);
    parallel_for(0, options.trials, [&](std::size_t t) {
      Rng rng(derive_seed(trial_seed, t));
      outcomes[t] = implication_trial(spec, composite, rng, options.dim, options.tolerance);
    });
    TrialTally t1, t2, t3;
    for (const auto& o : outcomes) {
      t1.antecedent += o.a1;
      t1.violations += o.v1;
      t2.antecedent += o.a2;
      t2.violations += o.v2;
      t3.antecedent += o.a3;
      t3.violations += o.v3;
    }

    const auto status = [](bool antecedent, bool consequent) {
      return !antecedent ? "vacuous" : consequent ? "holds" : "violated";
    };
    fi.implications.push_back(
        {kMonotonicityFromLimits,
         status((pass(A::subadditivity) || pass(A::convexity)) && pass(A::limitedness),
                pass(A::monotonicity)),
         t1.antecedent, t1.violations});
    fi.implications.push_back(
        {kLimitsFromMonotonicity,
         status(pass(A::translation_invariance) && pass(A::monotonicity), pass(A::limitedness)),
         t2.antecedent, t2.violations});
    if (composite) {
      const bool coherent = pass(A::monotonicity) && pass(A::translation_invariance) &&
                            pass(A::subadditivity) && pass(A::positive_homogeneity);
      const bool convex =
          pass(A::monotonicity) && pass(A::translation_invariance) && pass(A::convexity);
      fi.implications.push_back({kRangeFromComposition,
                                 status(coherent || convex, pass(A::lower_range_dominance)),
                                 t3.antecedent, t3.violations});
    }
    for (const auto& imp : fi.implications) {
      report.violations += (imp.status == std::string("violated")) + imp.trial_violations;
    }
    report.functionals.push_back(std::move(fi));
  }
  return report;
}

nlohmann::ordered_json to_json(const Instance& inst, Axiom axiom) {
  nlohmann::ordered_json j;
  j["family"] = inst.family;
  if (!inst.weights.empty()) j["weights"] = inst.weights;
  j["x"] = inst.x;
  if (!inst.y.empty()) j["y"] = inst.y;
  switch (axiom) {
    case Axiom::translation_invariance:
    case Axiom::translation_insensitivity:
      j["c"] = inst.scalar;
      break;
    case Axiom::positive_homogeneity:
    case Axiom::convexity:
      j["lambda"] = inst.scalar;
      break;
    default:
      break;
  }
  return j;
}

Instance instance_from_json(const nlohmann::json& j, Axiom axiom) {
  Instance inst;
  try {
    if (j.contains("family")) inst.family = j.at("family").get<std::string>();
    if (j.contains("weights")) inst.weights = j.at("weights").get<std::vector<double>>();
    inst.x = j.at("x").get<std::vector<double>>();
    if (j.contains("y")) inst.y = j.at("y").get<std::vector<double>>();
    if (j.contains("c")) inst.scalar = j.at("c").get<double>();
    if (j.contains("lambda")) inst.scalar = j.at("lambda").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("$", std::string("malformed instance: ") + e.what());
  }
  if (!precondition_holds(axiom, inst)) {
    throw ValidationError("instance does not satisfy the hypothesis of " +
                          std::string(to_string(axiom)));
  }
  return inst;
}

nlohmann::ordered_json to_json(const AxiomReport& r) {
  nlohmann::ordered_json j;
  j["axiom"] = std::string(to_string(r.axiom));
  j["verdict"] = std::string(to_string(r.verdict));
  switch (r.verdict) {
    case Verdict::pass:
      j["summary"] = "no counterexample in " + std::to_string(r.trials) + " trials";
      break;
    case Verdict::fail:
      j["summary"] = "counterexample at trial " + std::to_string(r.counterexample->trial);
      break;
    case Verdict::skipped:
      j["summary"] = "skipped";
      break;
  }
  j["trials"] = r.trials;
  j["max_violation"] = number_or_inf(r.max_violation);
  if (r.informational) j["informational"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    nlohmann::ordered_json c;
    c["trial"] = cx.trial;
    c["atoms_before_shrink"] = cx.atoms_before_shrink;
    c["instance"] = to_json(cx.instance, r.axiom);
    c["lhs"] = number_or_inf(cx.evaluation.lhs);
    c["rhs"] = number_or_inf(cx.evaluation.rhs);
    c["violation"] = number_or_inf(cx.evaluation.violation);
    c["tolerance"] = cx.evaluation.tolerance;
    nlohmann::ordered_json values;
    for (const auto& [k, v] : cx.evaluation.values) values[k] = number_or_inf(v);
    c["values"] = std::move(values);
    j["counterexample"] = std::move(c);
  }
  return j;
}

nlohmann::ordered_json to_json(const ImplicationReport& report) {
  nlohmann::ordered_json j;
  j["trials"] = report.trials;
  j["violations"] = report.violations;
  auto& list = j["functionals"] = nlohmann::ordered_json::array();
  for (const auto& fi : report.functionals) {
    nlohmann::ordered_json f;
    f["name"] = fi.name;
    f["label"] = fi.spec.label();
    nlohmann::ordered_json observed;
    for (const auto& r : fi.observed) observed[std::string(to_string(r.axiom))] = std::string(to_string(r.verdict));
    f["observed"] = std::move(observed);
    auto& imps = f["implications"] = nlohmann::ordered_json::array();
    for (const auto& imp : fi.implications) {
      imps.push_back({{"name", imp.name},
                      {"status", imp.status},
                      {"antecedent_trials", imp.antecedent_trials},
                      {"trial_violations", imp.trial_violations}});
    }
    list.push_back(std::move(f));
  }
  return j;
}

}  // namespace riskc
