#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lelong {

using Cell = std::variant<double, std::string>;

/// Tabular result: named columns, rows of numbers or labels, plus free-form
/// key/value metadata that only the JSON form carries.
struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;

  Report() = default;
  explicit Report(std::vector<std::string> cols) : columns(std::move(cols)) {}

  void add_row(std::vector<Cell> row);
  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view col) const;
  std::string text(std::size_t row, std::string_view col) const;

  void set_meta(std::string key, std::string value);
  std::string meta_value(std::string_view key) const;
};

/// Formats a double with 17 significant digits ("inf", "-inf", "nan" for
/// non-finite values).
std::string format_number(double x);

void write_csv(const Report& r, std::ostream& out);
Report read_csv(std::istream& in);

}  // namespace lelong
