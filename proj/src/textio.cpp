#include "mgom/textio.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace mgom {

std::string format_sci(double value, int significant_digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::scientific,
                                 significant_digits - 1);
  if (res.ec != std::errc())
    throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size())
    throw std::invalid_argument("csv header/column count mismatch");
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& col : columns)
    if (col.size() != rows)
      throw std::invalid_argument("csv columns must share one length");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);

  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out << ',';
    out << header[c];
  }
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      out << format_sci(columns[c][r]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace mgom
