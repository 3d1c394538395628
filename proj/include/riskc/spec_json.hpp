#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "riskc/measure_spec.hpp"

namespace riskc {

/// Parse a measure spec from JSON text. Unknown keys are rejected.
///
/// Grammar (nesting allowed wherever a spec is expected):
///   {"type":"neg_expectation"} | {"type":"worst_case"} | {"type":"range"}
///   {"type":"var"|"es","alpha":a} | {"type":"entropic","theta":t}
///   {"type":"spectral","alphas":[...],"masses":[...]}
///   {"type":"stdev"|"semidev","p":p}            p may be "inf"
///   {"type":"induced","rho":{...}}
///   {"type":"compose","rho":{...},"dev":{...},"beta":b}
///   {"type":"loss_deviation","rho":{...},"beta":b,"p":p}
///
/// Throws ParseError (with a JSON path such as "$.rho.alpha") on schema
/// violations and ValidationError on invariant breaches.
MeasureSpec parse_measure_spec(std::string_view text);
MeasureSpec measure_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::ordered_json to_json(const MeasureSpec& spec);
std::string serialize(const MeasureSpec& spec);

}  // namespace riskc
