#include <cmath>

#include "doctest.h"
#include "riskc/errors.hpp"
#include "riskc/scenario.hpp"
#include "support.hpp"

using namespace riskc;
using doctest::Approx;

namespace {
const EmpiricalDistribution kThree({-1.0, 0.0, 1.0});
const EmpiricalDistribution kSkew({10.0, 0.0}, {0.1, 0.9});
}  // namespace

TEST_CASE("construction enforces invariants") {
  CHECK_THROWS_AS(EmpiricalDistribution(std::vector<double>{}), ValidationError);
  CHECK_THROWS_AS(EmpiricalDistribution({1.0, 2.0}, {0.5}), ValidationError);
  CHECK_THROWS_AS(EmpiricalDistribution({1.0, 2.0}, {0.5, 0.6}), ValidationError);
  CHECK_THROWS_AS(EmpiricalDistribution({1.0, 2.0}, {1.0, 0.0}), ValidationError);
  CHECK_NOTHROW(EmpiricalDistribution({1.0, 2.0}, {0.5, 0.5 + 1e-13}));
  CHECK(kSkew.sorted().cumulative_weights.back() == 1.0);
}

TEST_CASE("quantile examples") {
  CHECK(quantile(kThree, 0.3) == -1.0);
  CHECK(quantile(EmpiricalDistribution::constant(4.25), 0.01) == 4.25);
  CHECK(quantile(EmpiricalDistribution::constant(4.25), 1.0) == 4.25);
  CHECK(quantile(EmpiricalDistribution({5.0, -2.0}, {0.5, 0.5}), 1.0) == 5.0);
  // At a jump the lower value is returned.
  CHECK(quantile(kThree, 1.0 / 3.0) == -1.0);
  CHECK(quantile(kThree, 2.0 / 3.0) == 0.0);
  CHECK_THROWS_AS(quantile(kThree, 0.0), DomainError);
  CHECK_THROWS_AS(quantile(kThree, 1.5), DomainError);
}

TEST_CASE("quantile agrees with brute-force inverse and is nondecreasing") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = testing::random_dist(rng, 1 + rng.index(12));
    const auto o = testing::to_oracle(d);
    double prev = -INFINITY;
    for (int k = 1; k <= 97; ++k) {
      const double u = k / 97.0;
      const double q = quantile(d, u);
      CHECK(q == oracle::quantile(o, u));
      CHECK(q >= prev);
      prev = q;
    }
  }
}

TEST_CASE("expectation examples and quantile integral identity") {
  CHECK(expectation(EmpiricalDistribution({-1.0, 1.0})) == 0.0);
  CHECK(expectation(kSkew) == Approx(1.0).epsilon(1e-15));
  CHECK(expectation(EmpiricalDistribution::constant(-3.5)) == -3.5);

  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = testing::random_dist(rng, 1 + rng.index(20));
    CHECK(std::abs(expectation(d) - integrated_quantile(d, 1.0)) <= 1e-12 * 20);
  }
}

TEST_CASE("p_norm examples and monotonicity in p") {
  const EmpiricalDistribution sym({-1.0, 1.0});
  CHECK(p_norm(sym, 2.0) == Approx(1.0));
  CHECK(p_norm(EmpiricalDistribution::constant(-3.0), kInfinity) == 3.0);
  const double v = p_norm(kSkew, [](double x) { return std::max(-(x - 1.0), 0.0); }, 2.0);
  CHECK(v == Approx(0.9486832980505138).epsilon(1e-14));
  CHECK_THROWS_AS(p_norm(sym, 0.5), DomainError);

  Rng rng(13);
  const double ps[] = {1.0, 1.5, 2.0, 3.0, 7.5, kInfinity};
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = testing::random_dist(rng, 1 + rng.index(15));
    for (std::size_t k = 1; k < std::size(ps); ++k) {
      CHECK(p_norm(d, ps[k - 1]) <= p_norm(d, ps[k]) + 1e-12 * (1 + p_norm(d, ps[k])));
    }
  }
}

TEST_CASE("essential infimum brackets the mean") {
  CHECK(essential_inf(kThree) == -1.0);
  CHECK(essential_inf(EmpiricalDistribution::constant(2.0)) == 2.0);
  CHECK(essential_inf(kSkew) == 0.0);
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = testing::random_dist(rng, 1 + rng.index(15));
    CHECK(essential_inf(d) <= expectation(d));
    CHECK(expectation(d) <= -essential_inf(d.negated()));
  }
}

TEST_CASE("comonotone pairs") {
  // Latent draws (0.2, 0.8) through x -> x and x -> 2x.
  const std::vector<double> x{0.2, 0.8}, y{0.4, 1.6};
  CHECK(is_comonotone(x, y));
  CHECK(oracle::comonotone_pairs(x, y));

  Rng rng(15);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng.index(16);
    const auto [a, b] = comonotone_pair(rng, n);
    REQUIRE(a.size() == n);
    REQUIRE(same_atoms(a, b));
    const std::vector<double> xa(a.outcomes().begin(), a.outcomes().end());
    std::vector<double> xb(b.outcomes().begin(), b.outcomes().end());
    CHECK(oracle::comonotone_pairs(xa, xb));
    CHECK(is_comonotone(xa, xb));
    // Shuffling one column breaks co-monotonicity unless a column is
    // constant; either way the fast check must agree with the pairwise one.
    rng.shuffle(xb);
    CHECK(is_comonotone(xa, xb) == oracle::comonotone_pairs(xa, xb));
  }
}

TEST_CASE("second-order stochastic dominance") {
  CHECK(ssd_dominates(kThree, kThree));
  CHECK(ssd_dominates(EmpiricalDistribution::constant(0.0), EmpiricalDistribution({-1.0, 1.0})));
  CHECK_FALSE(ssd_dominates(EmpiricalDistribution({-1.0, 1.0}), EmpiricalDistribution::constant(0.0)));

  Rng rng(16);
  int agree_true = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = testing::random_dist(rng, 1 + rng.index(6));
    const auto y = testing::random_dist(rng, 1 + rng.index(6));
    const bool fast = ssd_dominates(x, y);
    CHECK(fast == oracle::ssd(testing::to_oracle(x), testing::to_oracle(y)));
    agree_true += fast;
  }
  CHECK(agree_true > 10);
}
