#pragma once

// Observation ingestion: comma-delimited daily records with the fixed
// header `date,temperature,precipitation,humidity`. Rows are sorted by
// date after load; duplicate dates and out-of-domain values are errors.
// Cells may be left empty only for variables the active report
// configuration does not use.

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lingsum/config.hpp"
#include "lingsum/date.hpp"
#include "lingsum/error.hpp"
#include "lingsum/series.hpp"

namespace lingsum {

inline constexpr std::array<const char*, 3> kObservationColumns = {
    "temperature", "precipitation", "humidity"};

struct ObservationRow {
  Date date;
  std::array<std::optional<double>, 3> values;
};

class ObservationTable {
 public:
  ObservationTable() = default;
  explicit ObservationTable(std::vector<ObservationRow> rows)
      : rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end(),
              [](const ObservationRow& a, const ObservationRow& b) {
                return a.date < b.date;
              });
    for (std::size_t i = 1; i < rows_.size(); ++i) {
      if (rows_[i - 1].date == rows_[i].date) {
        throw ValidationError("duplicate date " + rows_[i].date.to_iso());
      }
    }
  }

  const std::vector<ObservationRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  Date start() const { return rows_.front().date; }
  Date end() const { return rows_.back().date; }

  static int column_index(const std::string& variable) {
    for (std::size_t i = 0; i < kObservationColumns.size(); ++i) {
      if (variable == kObservationColumns[i]) return static_cast<int>(i);
    }
    return -1;
  }

  // Extracts the series for one variable; every row must carry a value.
  DataSeries series(const std::string& variable) const {
    int col = column_index(variable);
    if (col < 0) {
      throw ValidationError("no observation column for variable '" + variable + "'");
    }
    std::vector<Observation> points;
    points.reserve(rows_.size());
    for (const ObservationRow& row : rows_) {
      const auto& cell = row.values[static_cast<std::size_t>(col)];
      if (!cell) {
        throw ValidationError("missing " + variable + " value on " +
                              row.date.to_iso());
      }
      points.push_back({row.date, *cell});
    }
    return DataSeries(variable, std::move(points));
  }

  std::string serialize() const {
    std::string out = "date,temperature,precipitation,humidity\n";
    for (const ObservationRow& row : rows_) {
      out += row.date.to_iso();
      for (const auto& cell : row.values) {
        out += ',';
        if (cell) out += format_value(*cell);
      }
      out += '\n';
    }
    return out;
  }

 private:
  static std::string format_value(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
  }

  std::vector<ObservationRow> rows_;
};

namespace detail {

inline std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else if (ch != '\r') {
      field.push_back(ch);
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace detail

inline ObservationTable load_observations(std::istream& in, const Bundle& bundle) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty observation file");
  ++lineno;
  {
    std::vector<std::string> header = detail::split_csv_row(line);
    const std::vector<std::string> expected = {"date", "temperature",
                                               "precipitation", "humidity"};
    if (std::vector<std::string>(header.begin(), header.end()) != expected) {
      throw ParseError("expected header date,temperature,precipitation,humidity",
                       lineno);
    }
  }

  // Variables the report actually consumes must have a value in every row.
  std::set<std::string> required;
  for (const auto& v : bundle.report.trend_variables) required.insert(v);
  for (const auto& c : bundle.report.counts) required.insert(c.variable);
  for (const auto& p : bundle.report.periods) required.insert(p.variable);

  std::vector<ObservationRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields = detail::split_csv_row(line);
    if (fields.size() != 4) {
      throw ParseError("expected 4 fields, got " + std::to_string(fields.size()),
                       lineno);
    }
    ObservationRow row;
    try {
      row.date = Date::parse(fields[0]);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (column date)", lineno);
    }
    for (std::size_t col = 0; col < kObservationColumns.size(); ++col) {
      const std::string& cell = fields[col + 1];
      const char* column = kObservationColumns[col];
      if (cell.empty()) {
        if (required.count(column)) {
          throw ParseError(std::string("missing required value (column ") +
                               column + ")",
                           lineno);
        }
        continue;
      }
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError("bad number '" + cell + "' (column " + column + ")", lineno);
      }
      if (const LinguisticVariable* var = bundle.kb.find_variable(column)) {
        if (value < var->domain_lo || value > var->domain_hi) {
          throw DomainError(std::string(column) + " value " + cell + " on " +
                            fields[0] + " outside domain [" +
                            std::to_string(var->domain_lo) + ", " +
                            std::to_string(var->domain_hi) + "]");
        }
      }
      row.values[col] = value;
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw ParseError("observation file has no data rows", lineno);
  return ObservationTable(std::move(rows));
}

inline ObservationTable load_observations_from_string(const std::string& text,
                                                      const Bundle& bundle) {
  std::istringstream in(text);
  return load_observations(in, bundle);
}

inline ObservationTable load_observations_from_file(const std::string& path,
                                                    const Bundle& bundle) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open observation file '" + path + "'");
  return load_observations(in, bundle);
}

}  // namespace lingsum
