#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "riskc/rng.hpp"
#include "riskc/scenario.hpp"

namespace riskc {

/// Shapes of randomized payoff columns. Skewed and tail-heavy shapes are
/// where composed functionals break, so they are drawn as often as the
/// benign ones.
enum class Family {
  symmetric_two_point,
  right_skew,
  left_skew,
  uniform_grid,
  adversarial_tail,
  gaussian_like,
  integers,
  constant,
};

inline constexpr std::array kFamilies{
    Family::symmetric_two_point, Family::right_skew,    Family::left_skew, Family::uniform_grid,
    Family::adversarial_tail,    Family::gaussian_like, Family::integers,  Family::constant,
};

std::string_view to_string(Family f) noexcept;

Family draw_family(Rng& rng);

/// Atom count in [1, max_dim], biased toward small spaces.
std::size_t draw_dim(Rng& rng, std::size_t max_dim);

/// n outcomes of the given shape.
std::vector<double> draw_outcomes(Rng& rng, Family family, std::size_t n);

/// n strictly positive weights summing to one. The last weight absorbs the
/// rounding so the total is exact to within one ulp.
std::vector<double> draw_weights(Rng& rng, std::size_t n);

/// Equiprobable when weights is empty.
EmpiricalDistribution make_distribution(std::vector<double> outcomes,
                                        const std::vector<double>& weights);

/// Replace each group of a random partition by its weighted mean, then add a
/// nonnegative shift. The result dominates the input in second order.
std::vector<double> contract(Rng& rng, const std::vector<double>& outcomes,
                             const std::vector<double>& weights);

}  // namespace riskc
