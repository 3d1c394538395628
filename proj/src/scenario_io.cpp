#include "riskc/scenario_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "riskc/errors.hpp"

namespace riskc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

EmpiricalDistribution ScenarioTable::distribution(std::size_t column) const {
  if (column >= values.size()) throw ConfigurationError("scenario column index out of range");
  if (weights) return EmpiricalDistribution(values[column], *weights);
  return EmpiricalDistribution(values[column]);
}

EmpiricalDistribution ScenarioTable::distribution(std::string_view column) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == column) return distribution(c);
  }
  throw ConfigurationError("no scenario column named '" + std::string(column) + "'");
}

ScenarioTable read_scenarios_csv(std::istream& in) {
  ScenarioTable table;
  std::optional<std::size_t> weight_col;
  std::vector<std::vector<double>> raw;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t width = 0;

  const auto add_row = [&](const std::vector<std::string_view>& cells) {
    if (cells.size() != width) {
      throw ParseError("line " + std::to_string(line_no),
                       "expected " + std::to_string(width) + " fields, got " +
                           std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(width);
    for (std::size_t c = 0; c < width; ++c) {
      const auto v = to_double(cells[c]);
      if (!v) {
        throw ParseError("line " + std::to_string(line_no) + ", field " + std::to_string(c + 1),
                         "not a number: '" + std::string(cells[c]) + "'");
      }
      row.push_back(*v);
    }
    raw.push_back(std::move(row));
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (!have_header) {
      have_header = true;
      width = cells.size();
      bool numeric = true;
      for (auto c : cells) numeric = numeric && to_double(c).has_value();
      std::vector<std::string> names;
      for (std::size_t c = 0; c < width; ++c) {
        names.push_back(numeric ? "x" + std::to_string(c) : std::string(cells[c]));
      }
      for (std::size_t c = 0; c < width; ++c) {
        if (names[c] == "weight") {
          weight_col = c;
        } else {
          table.columns.push_back(names[c]);
        }
      }
      if (numeric) add_row(cells);
      continue;
    }
    add_row(cells);
  }
  if (raw.empty()) throw ParseError("csv", "no scenario rows");
  if (table.columns.empty()) throw ParseError("csv", "no payoff columns");

  table.values.assign(table.columns.size(), {});
  if (weight_col) table.weights.emplace();
  for (const auto& row : raw) {
    std::size_t out = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (weight_col && c == *weight_col) {
        table.weights->push_back(row[c]);
      } else {
        table.values[out++].push_back(row[c]);
      }
    }
  }
  return table;
}

ScenarioTable parse_scenarios_json(std::string_view text) {
  using nlohmann::ordered_json;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError("$", std::string("malformed JSON: ") + e.what());
  }
  const auto column = [](const ordered_json& a, const std::string& path) {
    if (!a.is_array()) throw ParseError(path, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_number()) throw ParseError(path + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(a[i].get<double>());
    }
    return out;
  };

  ScenarioTable table;
  if (j.is_array()) {
    table.columns = {"x"};
    table.values = {column(j, "$")};
    return table;
  }
  if (!j.is_object()) throw ParseError("$", "expected an array or an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "outcomes" && it.key() != "columns" && it.key() != "weights") {
      throw ParseError("$." + it.key(), "unknown key");
    }
  }
  if (j.contains("outcomes") == j.contains("columns")) {
    throw ParseError("$", "exactly one of 'outcomes' or 'columns' is required");
  }
  if (j.contains("outcomes")) {
    table.columns = {"x"};
    table.values = {column(j["outcomes"], "$.outcomes")};
  } else {
    const auto& cols = j["columns"];
    if (!cols.is_object() || cols.empty()) throw ParseError("$.columns", "expected a non-empty object");
    for (auto it = cols.begin(); it != cols.end(); ++it) {
      table.columns.push_back(it.key());
      table.values.push_back(column(it.value(), "$.columns." + it.key()));
    }
  }
  if (j.contains("weights")) table.weights = column(j["weights"], "$.weights");
  for (std::size_t c = 0; c < table.values.size(); ++c) {
    if (table.values[c].size() != table.values.front().size() ||
        (table.weights && table.weights->size() != table.values[c].size())) {
      throw ParseError("$", "scenario columns and weights must have equal length");
    }
  }
  return table;
}

ScenarioTable load_scenarios(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file '" + path.string() + "'");
  if (path.extension() == ".json") {
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenarios_json(ss.str());
  }
  return read_scenarios_csv(in);
}

}  // namespace riskc
