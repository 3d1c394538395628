#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "riskc/measure_spec.hpp"
#include "riskc/rng.hpp"
#include "riskc/scenario.hpp"

namespace riskc {

enum class Provenance { analytic, search };

/// Values of dQ/dP on the atoms of a distribution, in input order.
struct DualDensity {
  std::vector<double> density;
  /// Convex penalty of Q; absent for coherent representations.
  std::optional<double> penalty;
  Provenance provenance = Provenance::analytic;
};

struct DensityCheck {
  double min_value = 0.0;
  /// |E_P[dQ/dP] - 1|.
  double mass_residual = 0.0;
  double max_value = 0.0;
  bool valid = false;
};

/// Nonnegativity (to -tolerance) and unit mass (to tolerance).
DensityCheck check_density(const EmpiricalDistribution& d, const DualDensity& q,
                           double tolerance = 1e-9);

/// E_Q[-X].
double expected_loss_under(const EmpiricalDistribution& d, const std::vector<double>& density);

struct DualWitnessReport {
  double primal = 0.0;
  /// E_Q[-X] minus the penalty when there is one.
  double dual = 0.0;
  double gap = 0.0;
  DualDensity density;
  std::vector<std::pair<std::string, double>> residuals;
  /// Constant input: every admissible density attains the value.
  bool degenerate = false;
};

/// Density 1/alpha on the lowest outcomes up to mass alpha, fractional on the
/// atom straddling the level.
DualWitnessReport es_dual_witness(const EmpiricalDistribution& d, double alpha);

/// Witness for -E[X] + beta * ||(X - E[X])^-||_p with density
/// 1 + beta * (E[W] - W), W <= 0, ||W||_q <= 1.
DualWitnessReport semidev_dual_witness(const EmpiricalDistribution& d, double p, double beta);

/// Density proportional to exp(-theta X) with penalty (1/theta) * relative
/// entropy.
DualWitnessReport entropic_dual_witness(const EmpiricalDistribution& d, double theta);

/// q_rho + q_dev - 1, validated. Throws InvalidPairError when the sum is
/// negative beyond 1e-12 or the mass is off beyond 1e-9.
DualDensity composed_dual_density(const EmpiricalDistribution& d, const DualDensity& q_rho,
                                  const DualDensity& q_dev);

/// q_rho * (1 + beta * E[W]) - beta * W with W the norm-dual of the shortfall
/// below -rho(X).
DualWitnessReport loss_deviation_witness(const EmpiricalDistribution& d, const MeasureSpec& rho,
                                         double beta, double p);

/// Analytic witness for any spec with a known maximizer: the coherent and
/// entropic risk measures, semideviation, induced and range deviations (as
/// the density of their dual set), and compositions and loss-deviations
/// built from them. Throws ConfigurationError otherwise.
DualWitnessReport analytic_witness(const MeasureSpec& spec, const EmpiricalDistribution& d);

/// Feasible set of densities for the brute-force maximizer. Projections are in
/// the L2(P) metric.
class ConstraintSet {
 public:
  virtual ~ConstraintSet() = default;
  virtual std::string name() const = 0;
  /// Search coordinates; for most sets the density itself.
  virtual std::vector<double> project(const EmpiricalDistribution& d, std::vector<double> y) const = 0;
  virtual std::vector<double> density_of(const EmpiricalDistribution& d,
                                         const std::vector<double>& coords) const = 0;
  /// Ascent direction of E_Q[-X] in search coordinates.
  virtual std::vector<double> gradient(const EmpiricalDistribution& d) const = 0;
  virtual std::vector<double> random_start(const EmpiricalDistribution& d, Rng& rng) const = 0;
  /// Search coordinates of a density known to lie in the set, if recoverable.
  virtual std::optional<std::vector<double>> coords_of(const EmpiricalDistribution& d,
                                                       const std::vector<double>& density) const;
  virtual bool contains(const EmpiricalDistribution& d, const std::vector<double>& density,
                        double tolerance) const = 0;
};

/// {0 <= q <= cap, E[q] = 1}; cap = 1/alpha gives the expected shortfall set,
/// an infinite cap all probability densities.
std::unique_ptr<ConstraintSet> box_simplex_set(double cap);
/// {1}.
std::unique_ptr<ConstraintSet> singleton_set();
/// {1 + beta * (E[W] - W) : W <= 0, ||W||_q <= 1} with q conjugate to p.
/// Projections are exact for p in {1, 2, inf}; otherwise feasible but
/// approximate.
std::unique_ptr<ConstraintSet> semideviation_set(double beta, double p);

struct SearchOptions {
  std::size_t restarts = 16;
  std::size_t iterations = 200;
  std::uint64_t seed = 1;
};

struct SearchResult {
  /// Best over all starts, including the warm start when given.
  double value = 0.0;
  /// Best over random starts only.
  double random_start_value = 0.0;
  DualDensity density;
  std::size_t starts = 0;
};

/// Projected ascent of E_Q[-X] over the set from random feasible starts and an
/// optional warm start. A lower bound on the sup by construction.
SearchResult brute_force_sup(const EmpiricalDistribution& d, const ConstraintSet& set,
                             const SearchOptions& options,
                             const std::vector<double>* warm_start = nullptr);

struct KusuokaReport {
  std::size_t atoms = 0;
  /// Levels k/n and the masses recovered from the tail basis.
  std::vector<double> levels;
  std::vector<double> masses;
  double most_negative_mass = 0.0;
  double max_discrepancy = 0.0;
  std::size_t validation_size = 0;
  bool comonotone_coherent = false;
  std::string verdict;
};

/// Recover the spectrum of a law-invariant functional on n equiprobable
/// atoms from its values on X^(k) = -1 on the k lowest atoms, then compare
/// sum_k m_k ES_{k/n} with the functional on random validation inputs.
KusuokaReport kusuoka_consistency(const MeasureSpec& spec, std::size_t atoms,
                                  std::size_t validation, std::uint64_t seed);

nlohmann::ordered_json to_json(const DualWitnessReport& report);
nlohmann::ordered_json to_json(const KusuokaReport& report);

}  // namespace riskc
