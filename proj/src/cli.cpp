#include "riskc/cli.hpp"

#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

#include "riskc/axioms.hpp"
#include "riskc/calibrate.hpp"
#include "riskc/compose.hpp"
#include "riskc/duality.hpp"
#include "riskc/errors.hpp"
#include "riskc/report_json.hpp"
#include "riskc/scenario_io.hpp"
#include "riskc/spec_json.hpp"

namespace riskc {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::eval, "eval"},
    {Command::axioms, "axioms"},
    {Command::class_check, "class-check"},
    {Command::dual, "dual"},
    {Command::kusuoka, "kusuoka"},
    {Command::calibrate_beta, "calibrate-beta"},
    {Command::implication_suite, "implication-suite"},
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MeasureSpec load_spec(const std::optional<std::string>& text, std::string_view flag) {
  if (!text) throw ConfigurationError("missing required --" + std::string(flag));
  if (!text->empty() && text->front() == '@') return parse_measure_spec(read_file(text->substr(1)));
  return parse_measure_spec(*text);
}

EmpiricalDistribution load_distribution(const RunConfig& c) {
  if (!c.scenarios) throw ConfigurationError("missing required --scenarios");
  const std::string& s = *c.scenarios;
  const bool inline_json = !s.empty() && (s.front() == '[' || s.front() == '{');
  const ScenarioTable table = inline_json ? parse_scenarios_json(s) : load_scenarios(s);
  if (table.columns.empty()) throw ConfigurationError("scenario input has no columns");
  return c.column.empty() ? table.distribution(std::size_t{0}) : table.distribution(c.column);
}

HarnessOptions harness(const RunConfig& c) {
  HarnessOptions h;
  h.trials = c.trials;
  h.seed = c.seed;
  h.dim = c.dim;
  h.tolerance = c.tolerance;
  return h;
}

Json harness_json(const RunConfig& c) {
  Json j;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["dim"] = c.dim;
  j["tolerance"] = c.tolerance;
  return j;
}

Json header(const RunConfig& c) {
  Json j;
  j["command"] = std::string(to_string(c.command));
  return j;
}

// Append the fields of part to j.
void merge(Json& j, const Json& part) {
  for (const auto& [k, v] : part.items()) j[k] = v;
}

struct Outcome {
  Json report;
  int exit_code = kExitOk;
};

Outcome run_eval(const RunConfig& c) {
  const auto spec = load_spec(c.measure, "measure");
  const auto d = load_distribution(c);
  Json j = header(c);
  j["measure"] = to_json(spec);
  j["label"] = spec.label();
  j["role"] = spec.role() == Role::risk ? "risk" : "deviation";
  j["atoms"] = d.size();
  j["value"] = number_or_inf(evaluate(spec, d));
  if (spec.role() == Role::risk) {
    const auto lim = check_limitedness(d, spec);
    j["limitedness"] = Json{{"holds", lim.holds}, {"slack", lim.slack}};
    const auto acc = acceptance_member(d, spec);
    j["acceptance"] = Json{{"member", acc.member}, {"risk", acc.risk}, {"penalty", acc.penalty}};
  } else {
    j["expectation"] = expectation(d);
  }
  return {std::move(j)};
}

Outcome run_axioms(const RunConfig& c) {
  const auto spec = load_spec(c.measure, "measure");
  Json j = header(c);
  j["measure"] = to_json(spec);
  j["options"] = harness_json(c);
  Json results = Json::array();
  int code = kExitOk;
  if (c.axiom) {
    const auto axiom = parse_axiom(*c.axiom);
    if (!axiom) throw ConfigurationError("unknown axiom '" + *c.axiom + "'");
    const auto r = check_axiom(spec, *axiom, harness(c));
    if (r.verdict == Verdict::fail) code = kExitFalsified;
    results.push_back(to_json(r));
  } else {
    // Survey mode: no claim is made, so failures do not change the status.
    for (int a = 0; a <= static_cast<int>(Axiom::fatou_continuity); ++a) {
      const auto axiom = static_cast<Axiom>(a);
      if (!applicable(spec, axiom)) continue;
      results.push_back(to_json(check_axiom(spec, axiom, harness(c))));
    }
  }
  j["results"] = std::move(results);
  return {std::move(j), code};
}

Outcome run_class_check(const RunConfig& c) {
  const auto spec = load_spec(c.measure, "measure");
  if (!c.functional_class) throw ConfigurationError("missing required --class");
  const auto cls = parse_class(*c.functional_class);
  if (!cls) throw ConfigurationError("unknown class '" + *c.functional_class + "'");
  const auto reports = check_class(spec, *cls, harness(c));
  const bool ok = bundle_passes(reports);
  Json j = header(c);
  j["measure"] = to_json(spec);
  j["class"] = std::string(to_string(*cls));
  j["options"] = harness_json(c);
  j["verdict"] = ok ? "pass" : "fail";
  Json results = Json::array();
  for (const auto& r : reports) results.push_back(to_json(r));
  j["results"] = std::move(results);
  return {std::move(j), ok ? kExitOk : kExitFalsified};
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Feasible set the brute-force search can explore for this spec, if any.
std::unique_ptr<ConstraintSet> search_set(const MeasureSpec& spec) {
  return std::visit(
      overloaded{
          [](const node::NegExpectation&) -> std::unique_ptr<ConstraintSet> { return singleton_set(); },
          [](const node::ExpectedShortfall& n) -> std::unique_ptr<ConstraintSet> {
            return box_simplex_set(1.0 / n.alpha);
          },
          [](const node::WorstCase&) -> std::unique_ptr<ConstraintSet> { return box_simplex_set(kInfinity); },
          [](const node::LowerSemideviation& n) -> std::unique_ptr<ConstraintSet> {
            return semideviation_set(1.0, n.p);
          },
          [](const node::Composition& n) -> std::unique_ptr<ConstraintSet> {
            if (!n.rho->is_neg_expectation()) return nullptr;
            if (const auto* s = std::get_if<node::LowerSemideviation>(&n.dev->node())) {
              return semideviation_set(n.beta, s->p);
            }
            return nullptr;
          },
          [](const auto&) -> std::unique_ptr<ConstraintSet> { return nullptr; },
      },
      spec.node());
}

Outcome run_dual(const RunConfig& c) {
  const auto spec = load_spec(c.measure, "measure");
  const auto d = load_distribution(c);
  const auto w = analytic_witness(spec, d);
  Json j = header(c);
  j["measure"] = to_json(spec);
  merge(j, to_json(w));
  if (const auto set = search_set(spec)) {
    SearchOptions o;
    o.seed = c.seed;
    const auto r = brute_force_sup(d, *set, o, &w.density.density);
    const double offset = spec.role() == Role::deviation ? expectation(d) : 0.0;
    Json s;
    s["set"] = set->name();
    s["value"] = r.value + offset;
    s["random_start_value"] = r.random_start_value + offset;
    s["starts"] = r.starts;
    s["excess_over_primal"] = r.value + offset - w.primal;
    s["density"] = r.density.density;
    j["search"] = std::move(s);
  }
  return {std::move(j)};
}

Outcome run_kusuoka(const RunConfig& c) {
  const auto spec = load_spec(c.measure, "measure");
  const auto r = kusuoka_consistency(spec, c.dim, c.trials, c.seed);
  Json j = header(c);
  j["measure"] = to_json(spec);
  merge(j, to_json(r));
  return {std::move(j)};
}

Outcome run_calibrate(const RunConfig& c) {
  const auto rho = load_spec(c.rho, "rho");
  const auto dev = load_spec(c.dev, "dev");
  CalibrationOptions o;
  o.candidates = c.candidates;
  o.seed = c.seed;
  o.dim = c.dim;
  const auto b = beta_bound(rho, dev, o);
  Json j = header(c);
  j["rho"] = to_json(rho);
  j["dev"] = to_json(dev);
  merge(j, to_json(b));
  int code = kExitOk;
  if (c.beta) {
    const auto w = certify_inadmissible(rho, dev, *c.beta, b);
    j["beta"] = *c.beta;
    if (w) {
      j["inadmissible"] = to_json(*w);
      code = kExitFalsified;
    } else {
      j["inadmissible"] = nullptr;
    }
  }
  return {std::move(j), code};
}

Outcome run_implications(const RunConfig& c) {
  ImplicationReport r;
  if (c.measure) {
    const auto spec = load_spec(c.measure, "measure");
    r = implication_suite({{spec.label(), spec}}, harness(c));
  } else {
    r = implication_suite(harness(c));
  }
  Json j = header(c);
  j["options"] = harness_json(c);
  merge(j, to_json(r));
  return {std::move(j), r.violations == 0 ? kExitOk : kExitFalsified};
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (const auto& [cmd, n] : kCommands) {
    if (n == name) return cmd;
  }
  return std::nullopt;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    Outcome out;
    switch (config.command) {
      case Command::eval: out = run_eval(config); break;
      case Command::axioms: out = run_axioms(config); break;
      case Command::class_check: out = run_class_check(config); break;
      case Command::dual: out = run_dual(config); break;
      case Command::kusuoka: out = run_kusuoka(config); break;
      case Command::calibrate_beta: out = run_calibrate(config); break;
      case Command::implication_suite: out = run_implications(config); break;
    }
    result.report = dump_report(out.report);
    result.exit_code = out.exit_code;
    if (!config.output.empty()) {
      std::ofstream f(config.output, std::ios::binary);
      if (!f || !(f << result.report)) throw IoError("cannot write " + config.output);
    }
  } catch (const std::exception& e) {
    result.exit_code = kExitError;
    result.report.clear();
    result.error = e.what();
  }
  return result;
}

}  // namespace riskc
