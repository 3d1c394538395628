#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "riskc/cli.hpp"

namespace {

struct Flags {
  std::string measure, rho, dev, scenarios, axiom, functional_class;
  double beta = 0.0;
};

void add_harness_flags(CLI::App* sub, riskc::RunConfig& cfg) {
  sub->add_option("--trials", cfg.trials, "Trials per axiom (validation inputs for kusuoka)");
  sub->add_option("--seed", cfg.seed, "Base seed");
  sub->add_option("--dim", cfg.dim, "Largest atom count (atom count for kusuoka)");
  sub->add_option("--tolerance", cfg.tolerance, "Relative tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate, compose and verify risk and deviation measures on scenario data"};
  app.require_subcommand(1);

  riskc::RunConfig cfg;
  Flags f;
  app.add_option("--output,-o", cfg.output, "Write the report here instead of stdout");

  auto* eval = app.add_subcommand("eval", "Evaluate a measure on scenarios");
  eval->add_option("--measure", f.measure, "Measure spec as JSON or @file")->required();
  eval->add_option("--scenarios", f.scenarios, "CSV or JSON file, or inline JSON")->required();
  eval->add_option("--column", cfg.column, "Column to use (default: first)");

  auto* axioms = app.add_subcommand("axioms", "Falsification run over the axioms of a measure");
  axioms->add_option("--measure", f.measure, "Measure spec as JSON or @file")->required();
  axioms->add_option("--axiom", f.axiom, "Check only this axiom; a counterexample exits with 2");
  add_harness_flags(axioms, cfg);

  auto* cls = app.add_subcommand("class-check", "Check a claimed class; exit 2 on a counterexample");
  cls->add_option("--measure", f.measure, "Measure spec as JSON or @file")->required();
  cls->add_option("--class", f.functional_class,
                  "coherent, convex, comonotone_coherent, generalized_deviation or convex_deviation")
      ->required();
  add_harness_flags(cls, cfg);

  auto* dual = app.add_subcommand("dual", "Dual witness density and brute-force cross-check");
  dual->add_option("--measure", f.measure, "Measure spec as JSON or @file")->required();
  dual->add_option("--scenarios", f.scenarios, "CSV or JSON file, or inline JSON")->required();
  dual->add_option("--column", cfg.column, "Column to use (default: first)");
  dual->add_option("--seed", cfg.seed, "Seed of the random starts");

  auto* kus = app.add_subcommand("kusuoka", "Recover the spectrum of a law-invariant risk measure");
  kus->add_option("--measure", f.measure, "Measure spec as JSON or @file")->required();
  add_harness_flags(kus, cfg);

  auto* cal = app.add_subcommand("calibrate-beta", "Empirical upper bound on the deviation weight");
  cal->add_option("--rho", f.rho, "Risk measure spec as JSON or @file")->required();
  cal->add_option("--dev", f.dev, "Deviation spec as JSON or @file")->required();
  cal->add_option("--candidates", cfg.candidates, "Candidate distributions to mine");
  cal->add_option("--seed", cfg.seed, "Base seed");
  cal->add_option("--dim", cfg.dim, "Largest candidate atom count");
  auto* beta_opt = cal->add_option("--beta", f.beta, "Weight to certify; exit 2 if refuted");

  auto* impl = app.add_subcommand("implication-suite", "Check the implications between axioms");
  impl->add_option("--measure", f.measure, "Restrict to one measure (default: the catalog)");
  add_harness_flags(impl, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : riskc::kExitError;
  }

  const auto* sub = app.get_subcommands().front();
  cfg.command = *riskc::parse_command(sub->get_name());
  if (!f.measure.empty()) cfg.measure = f.measure;
  if (!f.rho.empty()) cfg.rho = f.rho;
  if (!f.dev.empty()) cfg.dev = f.dev;
  if (!f.scenarios.empty()) cfg.scenarios = f.scenarios;
  if (!f.axiom.empty()) cfg.axiom = f.axiom;
  if (!f.functional_class.empty()) cfg.functional_class = f.functional_class;
  if (beta_opt->count() > 0) cfg.beta = f.beta;

  const auto result = riskc::run(cfg);
  if (result.exit_code == riskc::kExitError) {
    std::cerr << "riskc: " << result.error << '\n';
    return result.exit_code;
  }
  if (cfg.output.empty()) std::cout << result.report;
  return result.exit_code;
}
