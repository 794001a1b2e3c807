#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace torus::cli {

using Cell = std::variant<double, long long, std::string>;

std::string format_number(double v);
std::string format_cell(const Cell& c);

class ResultTable {
 public:
  ResultTable() = default;
  explicit ResultTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const noexcept { return meta_; }

  /// Throws std::invalid_argument when the row width does not match the header.
  void add_row(std::vector<Cell> row);
  void set_meta(const std::string& key, const std::string& value);
  void clear_meta() { meta_.clear(); }

  /// Header plus rows, no metadata.
  std::string body() const;
  /// `# key: value` lines followed by the body.
  std::string csv() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace torus::cli
