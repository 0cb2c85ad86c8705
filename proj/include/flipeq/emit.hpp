#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flipeq/exact_int.hpp"
#include "flipeq/gf_solvers.hpp"

namespace flipeq {

enum class output_format { plain, csv, json };

inline std::optional<output_format> parse_format(std::string_view s) {
  if (s == "plain") return output_format::plain;
  if (s == "csv") return output_format::csv;
  if (s == "json") return output_format::json;
  return std::nullopt;
}

// One indexed-value result set: a sequence, a table, or a coefficient list.
// Values are decimal strings; they outgrow 64 bits quickly.
struct value_table {
  std::string kind;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<std::string> index_columns;
  struct row {
    std::vector<long long> index;
    std::string value;
  };
  std::vector<row> rows;
};

namespace detail {
inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string pad_left(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}
}  // namespace detail

inline std::string emit_csv(const value_table& t) {
  std::string out;
  for (size_t c = 0; c < t.index_columns.size(); ++c) {
    out += t.index_columns[c];
    out.push_back(',');
  }
  out += "value\n";
  for (const auto& r : t.rows) {
    for (long long idx : r.index) {
      out += std::to_string(idx);
      out.push_back(',');
    }
    out += r.value;
    out.push_back('\n');
  }
  return out;
}

inline std::string emit_json(const value_table& t) {
  nlohmann::ordered_json doc;
  doc["kind"] = t.kind;
  doc["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.params) doc["params"][k] = v;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json e;
    e["index"] = r.index;
    e["value"] = r.value;
    doc["entries"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

// Inverse of emit_json, for round-trips and tooling.
inline value_table parse_json_table(const std::string& text) {
  auto doc = nlohmann::ordered_json::parse(text);
  value_table t;
  t.kind = doc.at("kind").get<std::string>();
  for (auto it = doc.at("params").begin(); it != doc.at("params").end(); ++it) {
    t.params.emplace_back(it.key(), it.value().get<long long>());
  }
  for (const auto& e : doc.at("entries")) {
    value_table::row r;
    r.index = e.at("index").get<std::vector<long long>>();
    r.value = e.at("value").get<std::string>();
    t.rows.push_back(std::move(r));
  }
  return t;
}

// Right-aligned columns, one row per entry: index columns then the value.
inline std::string emit_plain(const value_table& t) {
  const size_t ncols = t.index_columns.size() + 1;
  std::vector<size_t> width(ncols, 0);
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : t.rows) {
    std::vector<std::string> row;
    for (long long idx : r.index) row.push_back(std::to_string(idx));
    row.push_back(r.value);
    for (size_t c = 0; c < ncols; ++c) width[c] = std::max(width[c], row[c].size());
    cells.push_back(std::move(row));
  }
  std::string out;
  for (const auto& row : cells) {
    for (size_t c = 0; c < ncols; ++c) {
      if (c) out.push_back(' ');
      out += detail::pad_left(row[c], width[c]);
    }
    out.push_back('\n');
  }
  return out;
}

// Triangular grid: one line per leading index group, trailing index across.
// `group_cols` leading index columns become the row label; the last index
// column spreads left to right.
inline std::string emit_grid(const value_table& t, size_t group_cols) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> grid;
  std::vector<long long> current;
  for (const auto& r : t.rows) {
    std::vector<long long> key(r.index.begin(), r.index.end() - 1);
    if (grid.empty() || key != current) {
      current = key;
      std::string label;
      for (size_t c = 0; c < group_cols; ++c) {
        if (c) label.push_back(' ');
        label += std::to_string(r.index[c]);
      }
      labels.push_back(std::move(label));
      grid.emplace_back();
    }
    grid.back().push_back(r.value);
  }
  size_t label_width = 0, ncols = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  for (const auto& g : grid) ncols = std::max(ncols, g.size());
  std::vector<size_t> width(ncols, 0);
  for (const auto& g : grid)
    for (size_t c = 0; c < g.size(); ++c) width[c] = std::max(width[c], g[c].size());
  std::string out;
  for (size_t r = 0; r < grid.size(); ++r) {
    out += detail::pad_left(labels[r], label_width);
    out += " |";
    for (size_t c = 0; c < grid[r].size(); ++c) {
      out.push_back(' ');
      out += detail::pad_left(grid[r][c], width[c]);
    }
    out.push_back('\n');
  }
  return out;
}

// Pass/fail results of a verification scope.
struct check_table {
  std::string kind;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<check_result> checks;
  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

inline std::string emit_csv(const check_table& t) {
  std::string out = "check,status,detail\n";
  for (const auto& c : t.checks) {
    out += detail::csv_quote(c.name);
    out += c.passed ? ",pass," : ",fail,";
    out += detail::csv_quote(c.detail);
    out.push_back('\n');
  }
  return out;
}

inline std::string emit_json(const check_table& t) {
  nlohmann::ordered_json doc;
  doc["kind"] = t.kind;
  doc["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.params) doc["params"][k] = v;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : t.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    doc["checks"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

inline std::string emit_plain(const check_table& t) {
  std::string out;
  for (const auto& c : t.checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.passed && !c.detail.empty()) {
      out += ": ";
      out += c.detail;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace flipeq
