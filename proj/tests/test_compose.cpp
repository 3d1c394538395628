#include <cmath>

#include "doctest.h"
#include "riskc/compose.hpp"
#include "riskc/deviation_measures.hpp"
#include "riskc/errors.hpp"
#include "riskc/risk_measures.hpp"
#include "support.hpp"

using namespace riskc;
using doctest::Approx;

namespace {
const EmpiricalDistribution kThree({-1.0, 0.0, 1.0});
const EmpiricalDistribution kSym({-1.0, 1.0});
const EmpiricalDistribution kSkew({10.0, 0.0}, {0.1, 0.9});

const auto kMsdMinus = MeasureSpec::mean_plus_semideviation(1.0, 2.0);
const auto kMsdFull = MeasureSpec::mean_plus_deviation(1.0, 2.0);

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

TEST_CASE("composition examples") {
  CHECK(evaluate_composition(kSkew, kMsdMinus) == Approx(-0.0513167019494862).epsilon(1e-12));
  CHECK(evaluate_composition(kSkew, kMsdFull) == Approx(2.0).epsilon(1e-14));
  const auto zero = MeasureSpec::compose(MeasureSpec::expected_shortfall(0.2),
                                         MeasureSpec::full_deviation(2.0), 0.0);
  CHECK(evaluate_composition(kSkew, zero) == expected_shortfall(kSkew, 0.2));
  CHECK_THROWS_AS(MeasureSpec::compose(MeasureSpec::worst_case(), MeasureSpec::range(), -0.1),
                  ValidationError);
}

TEST_CASE("loss-deviation examples") {
  const auto es23 = MeasureSpec::expected_shortfall(2.0 / 3.0);
  CHECK(loss_deviation(kThree, es23, 1.0, 1.0) == Approx(2.0 / 3.0).epsilon(1e-14));
  const auto es13 = MeasureSpec::expected_shortfall(1.0 / 3.0);
  for (double beta : {0.0, 0.3, 1.0}) {
    for (double p : {1.0, 2.0, kInfinity}) {
      CHECK(loss_deviation(kThree, es13, beta, p) == Approx(1.0).epsilon(1e-14));
    }
  }
  CHECK(loss_deviation(EmpiricalDistribution::constant(4.0), es23, 0.7, 2.0) == -4.0);
  CHECK_THROWS_AS(MeasureSpec::loss_deviation(es23, 1.5, 2.0), ValidationError);
  CHECK_THROWS_AS(loss_deviation(kThree, es23, 1.5, 2.0), DomainError);
}

TEST_CASE("limitedness checks") {
  const auto good = check_limitedness(kSkew, kMsdMinus);
  CHECK(good.holds);
  CHECK(good.slack == Approx(0.0513167019494862).epsilon(1e-12));
  const auto bad = check_limitedness(kSkew, kMsdFull);
  CHECK_FALSE(bad.holds);
  CHECK(bad.slack == Approx(-2.0).epsilon(1e-14));
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto wc = check_limitedness(testing::random_dist(rng, 1 + rng.index(10)), MeasureSpec::worst_case());
    CHECK(wc.holds);
    CHECK(wc.slack == 0.0);
  }
}

TEST_CASE("acceptance set membership") {
  CHECK(acceptance_member(EmpiricalDistribution::constant(3.0), kMsdMinus).member);
  CHECK(acceptance_member(EmpiricalDistribution::constant(3.0), MeasureSpec::expected_shortfall(0.1)).member);
  const auto skew = acceptance_member(kSkew, kMsdMinus);
  CHECK(skew.member);
  CHECK(skew.risk == Approx(-1.0));
  CHECK(skew.penalty == Approx(0.9486832980505138));
  const auto sym = acceptance_member(kSym, kMsdMinus);
  CHECK_FALSE(sym.member);
  CHECK(sym.value == Approx(0.7071067811865476));
}

TEST_CASE("penalty and risk terms") {
  CHECK(penalty_term(kMsdMinus, kSkew) == Approx(0.9486832980505138));
  CHECK(risk_term(kMsdMinus, kSkew) == Approx(-1.0));
  CHECK(penalty_term(MeasureSpec::full_deviation(2.0), kSkew) == Approx(3.0));
  CHECK_THROWS_AS(penalty_term(MeasureSpec::worst_case(), kSkew), ConfigurationError);
  const auto ld = MeasureSpec::loss_deviation(MeasureSpec::expected_shortfall(2.0 / 3.0), 1.0, 1.0);
  CHECK(penalty_term(ld, kThree) == Approx(1.0 / 6.0));
  CHECK(risk_term(ld, kThree) == Approx(0.5));
}

TEST_CASE("composition invariants on random inputs") {
  Rng rng(42);
  const std::vector<MeasureSpec> specs{
      kMsdMinus,
      MeasureSpec::mean_plus_semideviation(0.5, kInfinity),
      MeasureSpec::loss_deviation(MeasureSpec::expected_shortfall(0.1), 1.0, 2.0),
      MeasureSpec::loss_deviation(MeasureSpec::expected_shortfall(0.5), 0.5, 1.0),
      MeasureSpec::compose(MeasureSpec::expected_shortfall(0.3),
                           MeasureSpec::induced(MeasureSpec::expected_shortfall(0.3)), 0.4),
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = testing::random_dist(rng, 1 + rng.index(20));
    const double c = rng.uniform(-30.0, 30.0);
    for (const auto& spec : specs) {
      const double v = evaluate_composition(d, spec);
      CHECK(close(evaluate_composition(d.shifted(c), spec), v - c, 1e-9));
    }
    // Loss-deviations are limited whatever the input.
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(evaluate_composition(d, specs[k]) <= -essential_inf(d) + 1e-9 * std::max(1.0, std::abs(essential_inf(d))));
    }
  }
}

TEST_CASE("special-case identities") {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = testing::random_dist(rng, 1 + rng.index(20));
    const double beta = rng.uniform(0.0, 1.0);
    const double p = std::array{1.0, 2.0, 3.5, kInfinity}[rng.index(4)];
    const double ld = loss_deviation(d, MeasureSpec::neg_expectation(), beta, p);
    const double msd = evaluate_composition(d, MeasureSpec::mean_plus_semideviation(beta, p));
    CHECK(std::abs(ld - msd) <= 1e-12 * std::max(1.0, std::abs(msd)));

    const double alpha = rng.uniform(0.01, 1.0);
    const auto rho = MeasureSpec::expected_shortfall(alpha);
    const double composed = evaluate_composition(d, MeasureSpec::compose(rho, MeasureSpec::induced(rho), beta));
    const double identity = (1.0 + beta) * expected_shortfall(d, alpha) + beta * expectation(d);
    CHECK(close(composed, identity, 1e-9));
  }
}

TEST_CASE("loss-deviation is sub-additive for coherent rho") {
  Rng rng(44);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng.index(12);
    std::vector<double> a(n), b(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng.uniform(-5.0, 5.0);
      b[i] = rng.uniform(-5.0, 5.0);
      s[i] = a[i] + b[i];
    }
    const EmpiricalDistribution x(a), y(b), z(s);
    for (double alpha : {0.05, 0.3, 1.0}) {
      for (double p : {1.0, 2.0, kInfinity}) {
        const auto rho = MeasureSpec::expected_shortfall(alpha);
        const double lhs = loss_deviation(z, rho, 1.0, p);
        const double rhs = loss_deviation(x, rho, 1.0, p) + loss_deviation(y, rho, 1.0, p);
        CHECK(lhs <= rhs + 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
      }
    }
  }
}
