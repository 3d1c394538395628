#pragma once

#include <string>

#include "json.hpp"

namespace riskc {

/// Serialize with fields in insertion order and every floating-point value
/// printed with 17 significant digits. Non-finite numbers become the strings
/// "inf", "-inf" and "nan". A trailing newline is appended.
std::string dump_report(const nlohmann::ordered_json& doc, int indent = 2);

/// Floating-point value that may be infinite ("inf" on the wire).
nlohmann::ordered_json number_or_inf(double v);

}  // namespace riskc
