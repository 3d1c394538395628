#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "riskc/measure_spec.hpp"
#include "riskc/rng.hpp"
#include "riskc/scenario.hpp"

namespace riskc {

struct HarnessOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  /// Largest atom count of a generated instance.
  std::size_t dim = 16;
  /// Absolute tolerance, widened to tolerance * max(1, |lhs|, |rhs|).
  double tolerance = 1e-9;
};

/// Inputs of one axiom trial: payoff columns on shared atoms plus the scalar
/// the clause quantifies over (shift for translation axioms, lambda for
/// homogeneity and convexity).
struct Instance {
  std::string family;
  /// Empty means equiprobable atoms.
  std::vector<double> weights;
  std::vector<double> x;
  /// Second column for pairwise axioms; for monotonicity x <= y pointwise,
  /// for ssd_consistency x dominates y.
  std::vector<double> y;
  double scalar = 0.0;

  std::size_t size() const { return x.size(); }
  EmpiricalDistribution dist_x() const;
  EmpiricalDistribution dist_y() const;
};

struct Evaluation {
  /// The clause reads lhs <= rhs (or lhs == rhs for equality axioms).
  double lhs = 0.0;
  double rhs = 0.0;
  /// Amount by which the clause fails; nonpositive when it holds exactly.
  double violation = 0.0;
  double tolerance = 0.0;
  bool violated = false;
  std::vector<std::pair<std::string, double>> values;
};

/// Throws ConfigurationError when the axiom does not apply to the spec's role.
void require_applicable(const MeasureSpec& spec, Axiom axiom);
bool applicable(const MeasureSpec& spec, Axiom axiom);

/// Draw the structured input an axiom quantifies over.
Instance generate_instance(Axiom axiom, Rng& rng, std::size_t max_dim);

/// Whether the instance satisfies the hypothesis of the axiom (ordering,
/// co-monotonicity, equal law, dominance).
bool precondition_holds(Axiom axiom, const Instance& instance);

/// Evaluate the clause on one instance.
Evaluation evaluate_instance(const MeasureSpec& spec, Axiom axiom, const Instance& instance,
                             double tolerance);

/// Greedy atom removal: drop atoms one at a time while the instance keeps its
/// hypothesis and still violates the clause.
Instance shrink(const MeasureSpec& spec, Axiom axiom, Instance instance, double tolerance);

enum class Verdict { pass, fail, skipped };
std::string_view to_string(Verdict v) noexcept;

struct Counterexample {
  Instance instance;
  Evaluation evaluation;
  /// Index of the first failing trial.
  std::size_t trial = 0;
  std::size_t atoms_before_shrink = 0;
};

struct AxiomReport {
  Axiom axiom{};
  Verdict verdict = Verdict::pass;
  /// Trials run; on failure, up to and including the first failing one.
  std::size_t trials = 0;
  double max_violation = 0.0;
  std::optional<Counterexample> counterexample;
  /// Reported alongside a class bundle without affecting its verdict.
  bool informational = false;
  std::string note;
};

/// Falsification run: trials are generated from per-trial seeds derived from
/// (seed, index), so the report does not depend on scheduling.
AxiomReport check_axiom(const MeasureSpec& spec, Axiom axiom, const HarnessOptions& options);

enum class FunctionalClass { coherent, convex, comonotone_coherent, generalized_deviation, convex_deviation };
std::string_view to_string(FunctionalClass c) noexcept;
std::optional<FunctionalClass> parse_class(std::string_view tag) noexcept;
std::vector<Axiom> class_axioms(FunctionalClass c);

/// The class bundle followed by informational extras (limitedness, lower range
/// dominance where applicable) and a skipped Fatou continuity entry.
std::vector<AxiomReport> check_class(const MeasureSpec& spec, FunctionalClass c,
                                     const HarnessOptions& options);

/// True when every non-informational report passed.
bool bundle_passes(const std::vector<AxiomReport>& reports);

/// Implication suite over a catalog that includes known-broken functionals.
struct ImplicationOutcome {
  std::string name;
  /// "holds", "vacuous" or "violated" at the level of observed verdicts.
  std::string status;
  /// Trials in which the antecedent held on the instance itself, and how many
  /// of those broke the consequent.
  std::size_t antecedent_trials = 0;
  std::size_t trial_violations = 0;
};

struct FunctionalImplications {
  std::string name;
  MeasureSpec spec;
  std::vector<AxiomReport> observed;
  std::vector<ImplicationOutcome> implications;
};

struct ImplicationReport {
  std::size_t trials = 0;
  std::vector<FunctionalImplications> functionals;
  std::size_t violations = 0;
};

std::vector<std::pair<std::string, MeasureSpec>> implication_catalog();

ImplicationReport implication_suite(const HarnessOptions& options);
ImplicationReport implication_suite(const std::vector<std::pair<std::string, MeasureSpec>>& catalog,
                                    const HarnessOptions& options);

nlohmann::ordered_json to_json(const Instance& instance, Axiom axiom);
Instance instance_from_json(const nlohmann::json& j, Axiom axiom);
nlohmann::ordered_json to_json(const AxiomReport& report);
nlohmann::ordered_json to_json(const ImplicationReport& report);

}  // namespace riskc
