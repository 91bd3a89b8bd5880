#include "text_table.hpp"

#include <fmt/format.h>
#include <fstream>
#include <sstream>

namespace ahpga::io::detail {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

TextTable TextTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, fmt::format("{}: cannot open file", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_string(path.string(), buffer.str());
}

TextTable TextTable::from_string(std::string name, std::string_view text) {
  TextTable table;
  table.name_ = std::move(name);
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : end - start);
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!trim(line).empty()) table.rows_.push_back({line_no, split(line, ',')});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return table;
}

const Row& TextTable::expect_header(const std::vector<std::string>& expected) const {
  if (rows_.empty()) throw error(0, "missing header row");
  const Row& header = rows_.front();
  if (header.fields != expected) {
    std::string joined;
    for (const auto& f : expected) joined += (joined.empty() ? "" : ",") + f;
    throw error(header, fmt::format("expected header '{}'", joined));
  }
  return header;
}

Error TextTable::error(int line, const std::string& message) const {
  if (line <= 0) return invalid_input(fmt::format("{}: {}", name_, message));
  return invalid_input(fmt::format("{}:{}: {}", name_, line, message));
}

}  // namespace ahpga::io::detail
