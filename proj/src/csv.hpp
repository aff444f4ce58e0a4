#pragma once

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wenolab::csv {

/// Shortest round-trip representation; identical bits give identical text.
inline std::string number(double v) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, p);
}

/// Writes `# comment`, a header row and column-major data.
inline void write(const std::string& path, std::string_view comment, const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& columns) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "# " << comment << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) f << (i ? "," : "") << header[i];
  f << '\n';
  const std::size_t rows = columns.empty() ? 0 : columns[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) f << (c ? "," : "") << number(columns[c][r]);
    f << '\n';
  }
  if (!f) throw std::runtime_error("write failed for " + path);
}

}  // namespace wenolab::csv
