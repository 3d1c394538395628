#include "riskc/spec_json.hpp"

#include <cmath>
#include <initializer_list>

#include "riskc/errors.hpp"
#include "riskc/report_json.hpp"
#include "riskc/scenario.hpp"

namespace riskc {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) throw ParseError(path + "." + it.key(), "unknown key");
  }
  for (const char* k : allowed) {
    if (!j.contains(k)) throw ParseError(path + "." + k, "missing required key");
  }
}

double number(const json& j, const std::string& key, const std::string& path) {
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "Infinity") return kInfinity;
  }
  throw ParseError(path + "." + key, "expected a number");
}

std::vector<double> numbers(const json& j, const std::string& key, const std::string& path) {
  const json& v = j.at(key);
  if (!v.is_array()) throw ParseError(path + "." + key, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      throw ParseError(path + "." + key + "[" + std::to_string(i) + "]", "expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

MeasureSpec child(const json& j, const std::string& key, const std::string& path) {
  return measure_from_json(j.at(key), path + "." + key);
}

MeasureSpec build(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  if (!j.contains("type") || !j["type"].is_string()) {
    throw ParseError(path + ".type", "missing or non-string type tag");
  }
  const auto type = j["type"].get<std::string>();
  if (type == "neg_expectation") {
    require_keys(j, path, {"type"});
    return MeasureSpec::neg_expectation();
  }
  if (type == "worst_case") {
    require_keys(j, path, {"type"});
    return MeasureSpec::worst_case();
  }
  if (type == "range") {
    require_keys(j, path, {"type"});
    return MeasureSpec::range();
  }
  if (type == "var") {
    require_keys(j, path, {"type", "alpha"});
    return MeasureSpec::value_at_risk(number(j, "alpha", path));
  }
  if (type == "es") {
    require_keys(j, path, {"type", "alpha"});
    return MeasureSpec::expected_shortfall(number(j, "alpha", path));
  }
  if (type == "entropic") {
    require_keys(j, path, {"type", "theta"});
    return MeasureSpec::entropic(number(j, "theta", path));
  }
  if (type == "spectral") {
    require_keys(j, path, {"type", "alphas", "masses"});
    return MeasureSpec::spectral(
        SpectralMeasure(numbers(j, "alphas", path), numbers(j, "masses", path)));
  }
  if (type == "stdev") {
    require_keys(j, path, {"type", "p"});
    return MeasureSpec::full_deviation(number(j, "p", path));
  }
  if (type == "semidev") {
    require_keys(j, path, {"type", "p"});
    return MeasureSpec::lower_semideviation(number(j, "p", path));
  }
  if (type == "induced") {
    require_keys(j, path, {"type", "rho"});
    return MeasureSpec::induced(child(j, "rho", path));
  }
  if (type == "compose") {
    require_keys(j, path, {"type", "rho", "dev", "beta"});
    return MeasureSpec::compose(child(j, "rho", path), child(j, "dev", path),
                                number(j, "beta", path));
  }
  if (type == "loss_deviation") {
    require_keys(j, path, {"type", "rho", "beta", "p"});
    return MeasureSpec::loss_deviation(child(j, "rho", path), number(j, "beta", path),
                                       number(j, "p", path));
  }
  throw ParseError(path + ".type", "unknown measure type '" + type + "'");
}

}  // namespace

MeasureSpec measure_from_json(const json& j, const std::string& path) {
  try {
    return build(j, path);
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    // Child errors already carry their own path.
    if (msg.rfind("$", 0) == 0) throw;
    throw ValidationError(path + ": " + msg);
  }
}

MeasureSpec parse_measure_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("malformed JSON: ") + e.what());
  }
  return measure_from_json(j, "$");
}

nlohmann::ordered_json to_json(const MeasureSpec& spec) {
  using oj = nlohmann::ordered_json;
  oj out;
  out["type"] = std::string(spec.kind());
  std::visit(overloaded{
                 [](const node::NegExpectation&) {},
                 [](const node::WorstCase&) {},
                 [](const node::RangeDeviation&) {},
                 [&](const node::ValueAtRisk& n) { out["alpha"] = n.alpha; },
                 [&](const node::ExpectedShortfall& n) { out["alpha"] = n.alpha; },
                 [&](const node::Entropic& n) { out["theta"] = n.theta; },
                 [&](const node::Spectral& n) {
                   out["alphas"] = n.spectrum.alphas();
                   out["masses"] = n.spectrum.masses();
                 },
                 [&](const node::FullDeviation& n) { out["p"] = number_or_inf(n.p); },
                 [&](const node::LowerSemideviation& n) { out["p"] = number_or_inf(n.p); },
                 [&](const node::InducedDeviation& n) { out["rho"] = to_json(*n.rho); },
                 [&](const node::Composition& n) {
                   out["rho"] = to_json(*n.rho);
                   out["dev"] = to_json(*n.dev);
                   out["beta"] = n.beta;
                 },
                 [&](const node::LossDeviation& n) {
                   out["rho"] = to_json(*n.rho);
                   out["beta"] = n.beta;
                   out["p"] = number_or_inf(n.p);
                 },
             },
             spec.node());
  return out;
}

std::string serialize(const MeasureSpec& spec) {
  std::string s = dump_report(to_json(spec), -1);
  s.pop_back();
  return s;
}

}  // namespace riskc
