#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace alphaharm {

inline constexpr int kReportSchemaVersion = 1;

// Tabular result with metadata. JSON carries every record as an object keyed
// by column name; CSV carries the header row plus one line per record.
struct Report {
  std::string kind;
  nlohmann::json metadata = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json summary = nlohmann::json::object();
  bool passed = true;

  void add_row(std::vector<double> row);

  nlohmann::json to_json() const;
  std::string to_json_text() const;  // two-space indented, trailing newline
  std::string to_csv() const;
};

// 17 significant digits (round-trip safe) with a '.' decimal separator.
std::string format_double(double value);

}  // namespace alphaharm
