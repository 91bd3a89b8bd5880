#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ahpga/error.hpp"

namespace ahpga::io::detail {

struct Row {
  int line = 0;
  std::vector<std::string> fields;
};

/// A comment-stripped, whitespace-trimmed delimited file. Rows keep their
/// source line numbers for diagnostics.
class TextTable {
 public:
  static TextTable load(const std::filesystem::path& path);
  static TextTable from_string(std::string name, std::string_view text);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }

  /// Throws unless the first row matches `expected` exactly.
  const Row& expect_header(const std::vector<std::string>& expected) const;

  Error error(int line, const std::string& message) const;
  Error error(const Row& row, const std::string& message) const {
    return error(row.line, message);
  }

 private:
  std::string name_;
  std::vector<Row> rows_;
};

std::string trim(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);

}  // namespace ahpga::io::detail
