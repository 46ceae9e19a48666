#pragma once

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace stacklab {

using Cell = nlohmann::ordered_json;

enum class TableFormat { Json, Csv, Plain };

inline TableFormat parse_format(const std::string& s) {
  if (s == "json") return TableFormat::Json;
  if (s == "csv") return TableFormat::Csv;
  if (s == "plain") return TableFormat::Plain;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, plain)");
}

/// Rows of cells in a fixed column order. Cells are JSON values so that
/// integers, strings and null survive into the JSON output unchanged;
/// counts go in as decimal strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::invalid_argument("row width does not match the header");
    rows.push_back(std::move(row));
  }
};

namespace detail {

inline std::string cell_text(const Cell& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline void emit_table(const Table& t, TableFormat format, std::ostream& os) {
  switch (format) {
    case TableFormat::Json: {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
        out.push_back(obj);
      }
      os << out.dump() << "\n";
      break;
    }
    case TableFormat::Csv: {
      for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << detail::csv_field(t.columns[c]);
      os << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << detail::csv_field(detail::cell_text(row[c]));
        os << "\n";
      }
      break;
    }
    case TableFormat::Plain: {
      std::vector<std::size_t> w(t.columns.size());
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        w[c] = t.columns[c].size();
        for (const auto& row : t.rows) w[c] = std::max(w[c], detail::cell_text(row[c]).size());
      }
      auto line = [&](auto get) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
          const std::string s = get(c);
          os << (c ? "  " : "") << std::string(w[c] - s.size(), ' ') << s;
        }
        os << "\n";
      };
      line([&](std::size_t c) { return t.columns[c]; });
      for (const auto& row : t.rows) line([&](std::size_t c) { return detail::cell_text(row[c]); });
      break;
    }
  }
  if (!os) throw std::runtime_error("could not write table output");
}

}  // namespace stacklab
