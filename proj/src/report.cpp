#include "alphaharm/report.hpp"

#include <charconv>
#include <cmath>

#include "alphaharm/errors.hpp"

namespace alphaharm {

void Report::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw ArgumentError("report row width does not match its columns");
  }
  rows.push_back(std::move(row));
}

nlohmann::json Report::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json rec = nlohmann::json::object();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      // JSON has no NaN/Inf; those become null.
      if (std::isfinite(row[c])) {
        rec[columns[c]] = row[c];
      } else {
        rec[columns[c]] = nullptr;
      }
    }
    records.push_back(std::move(rec));
  }
  return nlohmann::json{{"schema_version", kReportSchemaVersion},
                        {"kind", kind},
                        {"metadata", metadata},
                        {"columns", columns},
                        {"records", std::move(records)},
                        {"summary", summary},
                        {"passed", passed}};
}

std::string Report::to_json_text() const { return to_json().dump(2) + "\n"; }

std::string Report::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace alphaharm
