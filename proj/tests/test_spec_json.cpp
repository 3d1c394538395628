#include <sstream>

#include "doctest.h"
#include "riskc/errors.hpp"
#include "riskc/report_json.hpp"
#include "riskc/scenario_io.hpp"
#include "riskc/spec_json.hpp"

using namespace riskc;

TEST_CASE("parse simple and nested specs") {
  const auto es = parse_measure_spec(R"({"type":"es","alpha":0.05})");
  CHECK(es == MeasureSpec::expected_shortfall(0.05));
  const auto ld =
      parse_measure_spec(R"({"type":"loss_deviation","rho":{"type":"es","alpha":0.667},"beta":1.0,"p":1})");
  CHECK(ld == MeasureSpec::loss_deviation(MeasureSpec::expected_shortfall(0.667), 1.0, 1.0));
  const auto nested = parse_measure_spec(
      R"({"type":"compose","rho":{"type":"loss_deviation","rho":{"type":"spectral","alphas":[0.1,1],"masses":[0.5,0.5]},"beta":0.5,"p":"inf"},"dev":{"type":"semidev","p":2},"beta":0.25})");
  CHECK(nested.kind() == "compose");
}

TEST_CASE("validation errors name the constraint") {
  try {
    parse_measure_spec(R"({"type":"es","alpha":1.5})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("alpha must lie in (0,1]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_measure_spec(R"({"type":"stdev","p":0.5})"), ValidationError);
  CHECK_THROWS_AS(parse_measure_spec(R"({"type":"compose","rho":{"type":"worst_case"},"dev":{"type":"range"},"beta":-1})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_measure_spec(R"({"type":"spectral","alphas":[0.5],"masses":[0.7]})"), ValidationError);
  CHECK_THROWS_AS(parse_measure_spec(R"({"type":"induced","rho":{"type":"neg_expectation"}})"), ValidationError);
}

TEST_CASE("schema errors carry a JSON path") {
  try {
    parse_measure_spec(R"({"type":"compose","rho":{"type":"es","alpha":"x"},"dev":{"type":"range"},"beta":1})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.path() == "$.rho.alpha");
  }
  CHECK_THROWS_AS(parse_measure_spec(R"({"type":"es","alpha":0.1,"extra":1})"), ParseError);
  CHECK_THROWS_AS(parse_measure_spec(R"({"type":"es"})"), ParseError);
  CHECK_THROWS_AS(parse_measure_spec(R"({"type":"nope"})"), ParseError);
  CHECK_THROWS_AS(parse_measure_spec("{not json"), ParseError);
  CHECK_THROWS_AS(parse_measure_spec(R"({"type":"compose","rho":{"type":"range"},"dev":{"type":"range"},"beta":1})"),
                  Error);
}

TEST_CASE("round trip over the catalog") {
  const std::vector<MeasureSpec> specs{
      MeasureSpec::neg_expectation(),
      MeasureSpec::value_at_risk(0.1),
      MeasureSpec::expected_shortfall(1.0 / 3.0),
      MeasureSpec::entropic(0.7),
      MeasureSpec::worst_case(),
      MeasureSpec::spectral(SpectralMeasure({0.05, 0.5, 1.0}, {0.2, 0.3, 0.5})),
      MeasureSpec::full_deviation(kInfinity),
      MeasureSpec::lower_semideviation(1.5),
      MeasureSpec::induced(MeasureSpec::expected_shortfall(0.2)),
      MeasureSpec::range(),
      MeasureSpec::mean_plus_semideviation(0.5, 2.0),
      MeasureSpec::loss_deviation(MeasureSpec::entropic(2.0), 0.3, kInfinity),
      MeasureSpec::compose(MeasureSpec::loss_deviation(MeasureSpec::expected_shortfall(0.1), 1.0, 2.0),
                           MeasureSpec::induced(MeasureSpec::worst_case()), 0.1),
  };
  for (const auto& s : specs) {
    CAPTURE(serialize(s));
    CHECK(parse_measure_spec(serialize(s)) == s);
  }
}

TEST_CASE("csv ingestion") {
  std::istringstream in("x,weight\n10,0.1\n0,0.9\n");
  const auto t = read_scenarios_csv(in);
  REQUIRE(t.columns == std::vector<std::string>{"x"});
  CHECK(t.rows() == 2);
  const auto d = t.distribution(std::size_t{0});
  CHECK(d.outcomes()[0] == 10.0);
  CHECK(d.weights()[1] == 0.9);

  std::istringstream multi("a,b\n1,2\n3,4\n-5,6\n");
  const auto m = read_scenarios_csv(multi);
  CHECK(m.distribution("b").outcomes()[2] == 6.0);
  CHECK(m.distribution("a").equiprobable());
  CHECK_THROWS_AS(m.distribution("c"), ConfigurationError);

  std::istringstream headless("1.5\n2.5\n");
  CHECK(read_scenarios_csv(headless).columns == std::vector<std::string>{"x0"});

  std::istringstream broken("a\n1\nfoo\n");
  CHECK_THROWS_AS(read_scenarios_csv(broken), ParseError);
}

TEST_CASE("json ingestion") {
  CHECK(parse_scenarios_json("[1, 2, 3]").rows() == 3);
  const auto w = parse_scenarios_json(R"({"outcomes":[10,0],"weights":[0.1,0.9]})");
  CHECK(w.weights.has_value());
  const auto c = parse_scenarios_json(R"({"columns":{"p":[1,2],"q":[3,4]}})");
  CHECK(c.columns.size() == 2);
  CHECK_THROWS_AS(parse_scenarios_json(R"({"outcomes":[1],"bogus":1})"), ParseError);
}

TEST_CASE("report writer prints 17 significant digits in insertion order") {
  nlohmann::ordered_json doc;
  doc["z"] = 0.1;
  doc["a"] = std::vector<double>{1.0, 2.5};
  doc["inf"] = number_or_inf(kInfinity);
  doc["n"] = 3;
  CHECK(dump_report(doc, -1) == "{\"z\":0.10000000000000001,\"a\":[1,2.5],\"inf\":\"inf\",\"n\":3}\n");
}
