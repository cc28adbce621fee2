#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weak_tape.hpp"

namespace weakutm {

enum class Cell : std::uint8_t { zero = 0, one = 1 };

constexpr Cell to_cell(int v) { return v ? Cell::one : Cell::zero; }
constexpr int to_int(Cell c) { return static_cast<int>(c); }

/// Parses a string of '0'/'1' characters.
inline std::vector<Cell> cells(std::string_view bits) {
  std::vector<Cell> out;
  out.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("cells: expected '0' or '1'");
    out.push_back(ch == '1' ? Cell::one : Cell::zero);
  }
  return out;
}

inline std::string to_string(std::span<const Cell> row) {
  std::string s;
  s.reserve(row.size());
  for (Cell c : row) s.push_back(c == Cell::one ? '1' : '0');
  return s;
}

/// The Rule 110 local update. Bit (4l + 2c + r) of the rule number is the
/// new value of the center cell.
constexpr Cell update_cell(Cell left, Cell center, Cell right) {
  constexpr unsigned rule = 110;
  const unsigned idx = (unsigned(to_int(left)) << 2) | (unsigned(to_int(center)) << 1) | unsigned(to_int(right));
  return to_cell((rule >> idx) & 1u);
}

/// A Rule 110 row that is eventually periodic on both sides, plus the
/// timestep it belongs to.
class Rule110Config {
 public:
  Rule110Config() : tape_({Cell::zero}, {}, 0, {Cell::zero}) {}

  Rule110Config(std::vector<Cell> left_word, std::vector<Cell> center, Index origin,
                std::vector<Cell> right_word, std::uint64_t timestep = 0)
      : tape_(std::move(left_word), std::move(center), origin, std::move(right_word)),
        timestep_(timestep) {
    tape_.trim();
  }

  /// Purely periodic row with `cell(anchor) == word[0]`.
  static Rule110Config periodic(std::vector<Cell> word, Index anchor = 0, std::uint64_t timestep = 0) {
    auto copy = word;
    return Rule110Config(std::move(word), {}, anchor, std::move(copy), timestep);
  }

  [[nodiscard]] Cell cell(Index i) const { return tape_.read(i); }
  [[nodiscard]] std::vector<Cell> cells(const CellRange& range) const { return tape_.read(range); }
  [[nodiscard]] std::uint64_t timestep() const { return timestep_; }
  [[nodiscard]] const WeakTape<Cell>& tape() const { return tape_; }

  /// Cell-by-cell equality of the two rows, ignoring timestep and
  /// representation.
  friend bool same_row(const Rule110Config& a, const Rule110Config& b) {
    const auto& ta = a.tape_;
    const auto& tb = b.tape_;
    const auto left_period = std::lcm(static_cast<Index>(ta.left_word().size()), static_cast<Index>(tb.left_word().size()));
    const auto right_period = std::lcm(static_cast<Index>(ta.right_word().size()), static_cast<Index>(tb.right_word().size()));
    // Beyond both centers each row repeats with the lcm period, so one full
    // period on each side settles the rest.
    const Index lo = std::min(ta.origin(), tb.origin()) - left_period;
    const Index hi = std::max(ta.end(), tb.end()) + right_period - 1;
    for (Index i = lo; i <= hi; ++i) {
      if (ta.read(i) != tb.read(i)) return false;
    }
    return true;
  }

  friend bool operator==(const Rule110Config& a, const Rule110Config& b) {
    return a.timestep_ == b.timestep_ && same_row(a, b);
  }

 private:
  friend Rule110Config step(const Rule110Config& config);

  WeakTape<Cell> tape_;
  std::uint64_t timestep_ = 0;
};

namespace detail {
inline std::vector<Cell> step_cyclic(std::span<const Cell> word) {
  const std::size_t n = word.size();
  std::vector<Cell> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = update_cell(word[(j + n - 1) % n], word[j], word[(j + 1) % n]);
  }
  return out;
}
}  // namespace detail

/// One synchronous update of every cell.
///
/// The center widens by one background repetition per side (boundary
/// influence travels at most one cell per step), the backgrounds are stepped
/// as cyclic words, and the result is trimmed back to canonical size.
inline Rule110Config step(const Rule110Config& config) {
  const auto& t = config.tape_;
  const Index lo = t.origin() - static_cast<Index>(t.left_word().size());
  const Index hi = t.end() + static_cast<Index>(t.right_word().size()) - 1;
  std::vector<Cell> center;
  center.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Index i = lo; i <= hi; ++i) center.push_back(update_cell(t.read(i - 1), t.read(i), t.read(i + 1)));
  return Rule110Config(detail::step_cyclic(t.left_word()), std::move(center), lo,
                       detail::step_cyclic(t.right_word()), config.timestep_ + 1);
}

inline Rule110Config evolve(Rule110Config config, std::uint64_t steps) {
  for (std::uint64_t s = 0; s < steps; ++s) config = step(config);
  return config;
}

/// Rows 0..steps of the evolution, each restricted to `window`.
inline std::vector<std::vector<Cell>> spacetime(Rule110Config config, std::uint64_t steps, const CellRange& window) {
  std::vector<std::vector<Cell>> rows;
  rows.reserve(static_cast<std::size_t>(steps) + 1);
  rows.push_back(config.cells(window));
  for (std::uint64_t s = 0; s < steps; ++s) {
    config = step(config);
    rows.push_back(config.cells(window));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Ether

inline constexpr int ether_spatial_period = 14;
inline constexpr int ether_temporal_period = 7;

/// Row c_0 of the ether, cells 0..13. Every other row and cell follows by
/// periodicity and evolution.
inline constexpr std::array<Cell, 14> ether_word = {
    Cell::one,  Cell::zero, Cell::zero, Cell::one, Cell::one,  Cell::zero, Cell::one,
    Cell::one,  Cell::one,  Cell::one,  Cell::one, Cell::zero, Cell::zero, Cell::zero,
};

/// The ether at phase c_`phase`, as a purely periodic row anchored at cell 0.
inline Rule110Config ether_config(int phase = 0) {
  if (phase < 0) throw std::out_of_range("ether_config: phase must be nonnegative");
  auto c0 = Rule110Config::periodic(std::vector<Cell>(ether_word.begin(), ether_word.end()), 0);
  return evolve(c0, static_cast<std::uint64_t>(phase));
}

/// The seven distinct phase rows, each over cells 0..13.
inline std::array<std::vector<Cell>, ether_temporal_period> ether_rows() {
  std::array<std::vector<Cell>, ether_temporal_period> rows;
  auto c = ether_config(0);
  for (auto& row : rows) {
    row = c.cells({0, ether_spatial_period - 1});
    c = step(c);
  }
  return rows;
}

inline std::vector<Cell> ether_row(int phase, const CellRange& span) {
  if (phase < 0 || phase >= ether_temporal_period) throw std::out_of_range("ether_row: phase must be in 0..6");
  if (span.empty()) throw std::invalid_argument("ether_row: empty span");
  return ether_config(phase).cells(span);
}

}  // namespace weakutm
