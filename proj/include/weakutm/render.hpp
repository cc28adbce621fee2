#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rule110.hpp"

namespace weakutm {

using SpacetimeRows = std::vector<std::vector<Cell>>;

struct AsciiOptions {
  /// Prefix every row with the index of its leftmost cell.
  bool label_rows = false;
  Index first_index = 0;
};

/// '#' for 1, '.' for 0, rows separated by newlines (none after the last).
inline std::string render_ascii(const SpacetimeRows& rows, const AsciiOptions& opts = {}) {
  std::string out;
  const std::string label = opts.label_rows ? std::to_string(opts.first_index) + " " : std::string();
  for (const auto& row : rows) {
    if (row.empty()) continue;
    if (!out.empty()) out.push_back('\n');
    out += label;
    for (Cell c : row) out.push_back(c == Cell::one ? '#' : '.');
  }
  return out;
}

/// Binary PPM (P6), one black (1) or white (0) pixel per cell.
inline std::string render_ppm(const SpacetimeRows& rows) {
  if (rows.empty() || rows.front().empty()) return {};
  const std::size_t width = rows.front().size();
  if (std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r.size() != width; })) {
    throw std::invalid_argument("render_ppm: rows differ in width");
  }
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(rows.size()) + "\n255\n";
  out.reserve(out.size() + 3 * width * rows.size());
  for (const auto& row : rows) {
    for (Cell c : row) out.append(3, c == Cell::one ? '\x00' : '\xff');
  }
  return out;
}

}  // namespace weakutm
