#include <cmath>

#include "doctest.h"
#include "riskc/axioms.hpp"
#include "riskc/calibrate.hpp"
#include "riskc/compose.hpp"
#include "riskc/errors.hpp"
#include "riskc/risk_measures.hpp"
#include "support.hpp"

using namespace riskc;

namespace {
CalibrationOptions opts(std::size_t candidates, std::size_t dim, std::uint64_t seed = 5) {
  CalibrationOptions o;
  o.candidates = candidates;
  o.dim = dim;
  o.seed = seed;
  o.precheck_trials = 500;
  return o;
}
}  // namespace

TEST_CASE("mean plus sup-semideviation has bound one") {
  const auto b = beta_bound(MeasureSpec::neg_expectation(), MeasureSpec::lower_semideviation(kInfinity),
                            opts(5000, 12));
  CHECK(b.upper_bound >= 1.0 - 1e-9);
  CHECK(b.upper_bound <= 1.0 + 1e-9);
  CHECK(b.candidates_evaluated == 5000);

  // Two-point check: E[X] - inf X equals the largest shortfall below the mean.
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const double a = rng.uniform(-10.0, 10.0), gap = rng.uniform(0.01, 10.0), p = rng.uniform(0.05, 0.95);
    const EmpiricalDistribution d({a, a + gap}, {p, 1.0 - p});
    const auto [num, den] = limitedness_ratio_parts(MeasureSpec::neg_expectation(),
                                                    MeasureSpec::lower_semideviation(kInfinity), d);
    CHECK(std::abs(num / den - 1.0) <= 1e-9);
  }
}

TEST_CASE("expected shortfall with its induced deviation has bound zero") {
  for (double alpha : {0.05, 0.25, 1.0 / 3.0, 0.5, 0.9}) {
    const auto es = MeasureSpec::expected_shortfall(alpha);
    const auto dim = static_cast<std::size_t>(std::ceil(1.0 / alpha));
    const auto b = beta_bound(es, MeasureSpec::induced(es), opts(std::max<std::size_t>(dim * dim, 50), dim));
    CAPTURE(alpha);
    CHECK(b.upper_bound <= 1e-12);
    // The witness sits at its minimum on the whole lower alpha-tail.
    const auto o = testing::to_oracle(b.witness);
    CHECK(std::abs(oracle::es_min_formula(o, alpha) + essential_inf(b.witness)) <= 1e-12);
    CHECK(b.denominator > 0.0);
  }
}

TEST_CASE("worst case risk has bound zero against any deviation") {
  for (const auto& dev : {MeasureSpec::range(), MeasureSpec::full_deviation(2.0),
                          MeasureSpec::lower_semideviation(1.0)}) {
    const auto b = beta_bound(MeasureSpec::worst_case(), dev, opts(300, 8));
    CHECK(b.upper_bound == 0.0);
  }
}

TEST_CASE("the bound is re-evaluated at its witness") {
  const auto rho = MeasureSpec::neg_expectation();
  const auto dev = MeasureSpec::lower_semideviation(2.0);
  const auto b = beta_bound(rho, dev, opts(3000, 16));
  const auto [num, den] = limitedness_ratio_parts(rho, dev, b.witness);
  CHECK(std::abs(num / den - b.upper_bound) <= 1e-9);
  // ||s||_2 <= ||s||_inf = E[X] - inf X.
  CHECK(b.upper_bound >= 1.0 - 1e-12);
}

TEST_CASE("more candidates never raise the bound") {
  const auto rho = MeasureSpec::entropic(0.5);
  const auto dev = MeasureSpec::full_deviation(2.0);
  double prev = kInfinity;
  for (std::size_t n : {100u, 400u, 1600u, 6400u}) {
    const double b = beta_bound(rho, dev, opts(n, 10)).upper_bound;
    CHECK(b <= prev);
    prev = b;
  }
}

TEST_CASE("certification of inadmissible weights") {
  const auto rho = MeasureSpec::neg_expectation();
  const auto full = MeasureSpec::full_deviation(2.0);

  // The two-point witness of the mean-plus-standard-deviation example.
  const EmpiricalDistribution skew({10.0, 0.0}, {0.1, 0.9});
  const auto lim = check_limitedness(skew, MeasureSpec::mean_plus_deviation(1.0, 2.0));
  CHECK_FALSE(lim.holds);
  CHECK(lim.value == doctest::Approx(2.0).epsilon(1e-14));
  const auto [num, den] = limitedness_ratio_parts(rho, full, skew);
  CHECK(num / den == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const auto b = beta_bound(rho, full, opts(2000, 8));
  CHECK(b.upper_bound <= 1.0 / 3.0 + 1e-12);
  const auto c = certify_inadmissible(rho, full, 1.0, b);
  REQUIRE(c.has_value());
  CHECK(c->violation > 1e-9);
  CHECK_FALSE(certify_inadmissible(rho, full, 0.0, b).has_value());
  CHECK_FALSE(certify_inadmissible(rho, full, b.upper_bound, b).has_value());

  const auto es = MeasureSpec::expected_shortfall(1.0 / 3.0);
  const auto zero = beta_bound(es, MeasureSpec::induced(es), opts(100, 3));
  const auto z = certify_inadmissible(es, MeasureSpec::induced(es), 0.1, zero);
  REQUIRE(z.has_value());
  CHECK(z->violation > 1e-9);
  CHECK_FALSE(check_limitedness(z->witness, MeasureSpec::compose(es, MeasureSpec::induced(es), 0.1)).holds);
}

TEST_CASE("certificates reproduce just above the bound") {
  const std::vector<std::pair<MeasureSpec, MeasureSpec>> pairs = {
      {MeasureSpec::neg_expectation(), MeasureSpec::full_deviation(2.0)},
      {MeasureSpec::neg_expectation(), MeasureSpec::lower_semideviation(2.0)},
      {MeasureSpec::expected_shortfall(0.1), MeasureSpec::range()},
      {MeasureSpec::entropic(1.0), MeasureSpec::lower_semideviation(1.0)},
      {MeasureSpec::expected_shortfall(0.25), MeasureSpec::induced(MeasureSpec::expected_shortfall(0.25))},
  };
  for (const auto& [rho, dev] : pairs) {
    const auto b = beta_bound(rho, dev, opts(2000, 12));
    const auto c = certify_inadmissible(rho, dev, b.upper_bound + 1e-6, b);
    CAPTURE(rho.label());
    CAPTURE(dev.label());
    REQUIRE(c.has_value());
    CHECK(c->violation > 1e-9);
  }
}

TEST_CASE("weights at or below the bound pass the harness") {
  const auto rho = MeasureSpec::neg_expectation();
  HarnessOptions h;
  h.trials = 3000;
  h.seed = 11;
  for (const auto& [dev, beta] : {std::pair{MeasureSpec::lower_semideviation(kInfinity), 1.0},
                                  std::pair{MeasureSpec::lower_semideviation(2.0), 1.0}}) {
    const auto b = beta_bound(rho, dev, opts(2000, 12));
    CHECK(beta <= b.upper_bound + 1e-9);
    const auto report = check_axiom(MeasureSpec::compose(rho, dev, beta), Axiom::limitedness, h);
    CHECK(report.verdict == Verdict::pass);
  }
}

TEST_CASE("calibration errors") {
  const auto msd = MeasureSpec::mean_plus_deviation(1.0, 2.0);
  CHECK_THROWS_AS(beta_bound(msd, MeasureSpec::range(), opts(100, 8)), ConfigurationError);
  CHECK_THROWS_AS(beta_bound(MeasureSpec::range(), MeasureSpec::range(), opts(100, 8)), ConfigurationError);
  CHECK_THROWS_AS(beta_bound(MeasureSpec::neg_expectation(), MeasureSpec::worst_case(), opts(100, 8)),
                  ConfigurationError);
  // Single-atom candidates carry no deviation.
  CHECK_THROWS_AS(beta_bound(MeasureSpec::neg_expectation(), MeasureSpec::range(), opts(100, 1)),
                  DegenerateDeviationError);
}

TEST_CASE("calibration is reproducible across thread counts") {
  const auto rho = MeasureSpec::expected_shortfall(0.3);
  const auto dev = MeasureSpec::full_deviation(1.5);
  setenv("RISKC_THREADS", "1", 1);
  const auto a = to_json(beta_bound(rho, dev, opts(3000, 16, 99))).dump();
  setenv("RISKC_THREADS", "4", 1);
  const auto b = to_json(beta_bound(rho, dev, opts(3000, 16, 99))).dump();
  unsetenv("RISKC_THREADS");
  CHECK(a == b);
}
