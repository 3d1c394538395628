#include <cstdlib>

#include "doctest.h"
#include "riskc/axioms.hpp"
#include "riskc/errors.hpp"
#include "riskc/report_json.hpp"

using namespace riskc;

namespace {

HarnessOptions opts(std::size_t trials, std::uint64_t seed = 5, std::size_t dim = 32) {
  HarnessOptions o;
  o.trials = trials;
  o.seed = seed;
  o.dim = dim;
  return o;
}

const AxiomReport* find(const std::vector<AxiomReport>& rs, Axiom a) {
  for (const auto& r : rs) {
    if (r.axiom == a) return &r;
  }
  return nullptr;
}

void check_replays(const MeasureSpec& spec, const AxiomReport& r) {
  REQUIRE(r.verdict == Verdict::fail);
  REQUIRE(r.counterexample.has_value());
  // Round trip through the serialized witness, then re-evaluate standalone.
  const auto j = nlohmann::json::parse(dump_report(to_json(r.counterexample->instance, r.axiom)));
  const Instance back = instance_from_json(j, r.axiom);
  const Evaluation ev = evaluate_instance(spec, r.axiom, back, 1e-9);
  CHECK(ev.violated);
  CHECK(ev.violation >= ev.tolerance);
  CHECK(back.size() <= r.counterexample->atoms_before_shrink);
}

}  // namespace

TEST_CASE("generated instances satisfy their hypotheses") {
  for (Axiom a : {Axiom::monotonicity, Axiom::translation_invariance, Axiom::subadditivity,
                  Axiom::positive_homogeneity, Axiom::convexity, Axiom::law_invariance,
                  Axiom::comonotonic_additivity, Axiom::limitedness, Axiom::ssd_consistency}) {
    CAPTURE(to_string(a));
    int nontrivial_ssd = 0;
    for (std::uint64_t t = 0; t < 3000; ++t) {
      Rng rng(derive_seed(99, t));
      const Instance inst = generate_instance(a, rng, 64);
      REQUIRE(inst.size() >= 1);
      REQUIRE(inst.size() <= 64);
      CHECK(precondition_holds(a, inst));
      if (a == Axiom::ssd_consistency) nontrivial_ssd += inst.x != inst.y;
    }
    if (a == Axiom::ssd_consistency) CHECK(nontrivial_ssd > 1500);
  }
}

TEST_CASE("coherent measures pass their axioms") {
  const auto es = MeasureSpec::expected_shortfall(0.05);
  CHECK(check_axiom(es, Axiom::subadditivity, opts(20000)).verdict == Verdict::pass);
  const auto rs = check_class(es, FunctionalClass::coherent, opts(5000));
  CHECK(bundle_passes(rs));
  for (const auto& r : rs) {
    if (r.axiom != Axiom::fatou_continuity) CHECK(r.verdict == Verdict::pass);
  }
  const auto* fatou = find(rs, Axiom::fatou_continuity);
  REQUIRE(fatou);
  CHECK(fatou->verdict == Verdict::skipped);
  CHECK(to_json(rs.front())["summary"] == "no counterexample in 5000 trials");
}

TEST_CASE("negative controls are falsified with replayable witnesses") {
  const auto var = MeasureSpec::value_at_risk(0.1);
  const auto r1 = check_axiom(var, Axiom::subadditivity, opts(10000));
  check_replays(var, r1);
  CHECK(r1.counterexample->instance.y.size() == r1.counterexample->instance.x.size());

  const auto msd = MeasureSpec::mean_plus_deviation(1.0, 2.0);
  check_replays(msd, check_axiom(msd, Axiom::monotonicity, opts(10000)));
  check_replays(msd, check_axiom(msd, Axiom::limitedness, opts(10000)));

  const auto ent = MeasureSpec::entropic(1.0);
  check_replays(ent, check_axiom(ent, Axiom::positive_homogeneity, opts(10000)));

  // The skewed two-atom witness, evaluated directly.
  Instance w;
  w.weights = {0.1, 0.9};
  w.x = {0.0, 0.0};
  w.y = {10.0, 0.0};
  const auto ev = evaluate_instance(msd, Axiom::monotonicity, w, 1e-9);
  CHECK(ev.violated);
  CHECK(ev.lhs == doctest::Approx(2.0));
  CHECK(ev.rhs == 0.0);
}

TEST_CASE("class bundles") {
  const auto ent = MeasureSpec::entropic(1.0);
  const auto as_coherent = check_class(ent, FunctionalClass::coherent, opts(5000));
  CHECK_FALSE(bundle_passes(as_coherent));
  CHECK(find(as_coherent, Axiom::positive_homogeneity)->verdict == Verdict::fail);
  CHECK(bundle_passes(check_class(ent, FunctionalClass::convex, opts(5000))));

  const auto semi = check_class(MeasureSpec::lower_semideviation(2.0),
                                FunctionalClass::generalized_deviation, opts(5000));
  CHECK(bundle_passes(semi));
  REQUIRE(find(semi, Axiom::lower_range_dominance));
  CHECK(find(semi, Axiom::lower_range_dominance)->verdict == Verdict::pass);

  const auto full = check_class(MeasureSpec::full_deviation(2.0),
                                FunctionalClass::generalized_deviation, opts(5000));
  CHECK(bundle_passes(full));
  CHECK(find(full, Axiom::lower_range_dominance)->verdict == Verdict::fail);

  const auto induced = check_class(MeasureSpec::induced(MeasureSpec::expected_shortfall(0.2)),
                                   FunctionalClass::generalized_deviation, opts(5000));
  CHECK(bundle_passes(induced));

  CHECK_FALSE(bundle_passes(check_class(MeasureSpec::value_at_risk(0.1), FunctionalClass::coherent,
                                        opts(10000))));
  CHECK(bundle_passes(check_class(MeasureSpec::expected_shortfall(0.3),
                                  FunctionalClass::comonotone_coherent, opts(5000))));
  CHECK_FALSE(bundle_passes(check_class(MeasureSpec::mean_plus_semideviation(1.0, 2.0),
                                        FunctionalClass::comonotone_coherent, opts(10000))));
}

TEST_CASE("inapplicable pairings are configuration errors") {
  CHECK_THROWS_AS(check_axiom(MeasureSpec::full_deviation(2.0), Axiom::monotonicity, opts(10)),
                  ConfigurationError);
  CHECK_THROWS_AS(check_axiom(MeasureSpec::worst_case(), Axiom::non_negativity, opts(10)),
                  ConfigurationError);
  CHECK_THROWS_AS(check_axiom(MeasureSpec::worst_case(), Axiom::lower_range_dominance, opts(10)),
                  ConfigurationError);
  CHECK_THROWS_AS(check_class(MeasureSpec::worst_case(), FunctionalClass::convex_deviation, opts(10)),
                  ConfigurationError);
}

TEST_CASE("reports are reproducible and schedule independent") {
  const auto spec = MeasureSpec::value_at_risk(0.1);
  setenv("RISKC_THREADS", "1", 1);
  const auto a = dump_report(to_json(check_axiom(spec, Axiom::subadditivity, opts(10000, 3))));
  const auto b = dump_report(to_json(check_axiom(spec, Axiom::subadditivity, opts(10000, 3))));
  setenv("RISKC_THREADS", "4", 1);
  const auto c = dump_report(to_json(check_axiom(spec, Axiom::subadditivity, opts(10000, 3))));
  unsetenv("RISKC_THREADS");
  CHECK(a == b);
  CHECK(a == c);
  const auto d = dump_report(to_json(check_axiom(spec, Axiom::subadditivity, opts(10000, 4))));
  CHECK(a != d);
}

TEST_CASE("non-negativity treats near-zero dispersion as a violation") {
  Instance flat;
  flat.x = {1.0, 1.0 + 1e-13};
  const auto ev = evaluate_instance(MeasureSpec::lower_semideviation(2.0), Axiom::non_negativity, flat, 1e-9);
  CHECK(ev.violated);
  Instance constant;
  constant.x = {4.0, 4.0, 4.0};
  CHECK_FALSE(evaluate_instance(MeasureSpec::full_deviation(1.0), Axiom::non_negativity, constant, 1e-9).violated);
}

TEST_CASE("implication suite") {
  const auto report = implication_suite(opts(2000, 11, 24));
  CHECK(report.violations == 0);
  const auto status = [&](const std::string& name, std::size_t k) {
    for (const auto& f : report.functionals) {
      if (f.name == name) return f.implications.at(k).status;
    }
    return std::string("missing");
  };
  CHECK(status("msd_minus_1_p2", 0) == "holds");
  CHECK(status("msd_full_1_p2", 0) == "vacuous");
  CHECK(status("worst_case", 1) == "holds");
  CHECK(status("es_1/3_plus_0.5_induced", 0) == "vacuous");
  CHECK(status("ld_es_0.1_b1_p2", 2) == "holds");
  for (const auto& f : report.functionals) {
    for (const auto& imp : f.implications) {
      CAPTURE(f.name);
      CAPTURE(imp.name);
      CHECK(imp.status != "violated");
      CHECK(imp.trial_violations == 0);
    }
  }
}
