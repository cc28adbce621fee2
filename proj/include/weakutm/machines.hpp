#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rule110.hpp"
#include "turing.hpp"

namespace weakutm {

enum class MachineId { u33, u24, u62 };

inline constexpr std::array<MachineId, 3> all_machines = {MachineId::u33, MachineId::u24, MachineId::u62};

inline std::string to_string(MachineId id) {
  switch (id) {
    case MachineId::u33: return "u33";
    case MachineId::u24: return "u24";
    case MachineId::u62: return "u62";
  }
  throw std::invalid_argument("unknown machine id");
}

inline MachineId parse_machine_id(std::string_view s) {
  for (MachineId id : all_machines) {
    if (s == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown machine id '" + std::string(s) + "' (expected u33, u24 or u62)");
}

/// How a tape symbol is shown. `plain` is ASCII: overlined symbols are
/// written with a trailing '~' ("0~" for 0 with overline).
struct Glyph {
  std::string display;
  std::string plain;
  friend bool operator==(const Glyph&, const Glyph&) = default;
};

enum class Side { left, right };

/// A word that decodes as a unit, overriding the per-group map. Matched
/// before grouping.
struct DecodePattern {
  std::vector<Symbol> word;
  std::vector<Cell> cells;  // one per group of `word`
  friend bool operator==(const DecodePattern&, const DecodePattern&) = default;
};

struct SideEncoding {
  std::map<std::vector<Symbol>, Cell> groups;
  std::vector<DecodePattern> patterns;
  friend bool operator==(const SideEncoding&, const SideEncoding&) = default;
};

/// Tape symbols <-> Rule 110 cells. Each Rule 110 cell j occupies the
/// `group_size` tape cells ending at tape index group_size * j.
struct EncodingMap {
  int group_size = 1;
  SideEncoding left;
  SideEncoding right;

  [[nodiscard]] const SideEncoding& side(Side s) const { return s == Side::left ? left : right; }
  friend bool operator==(const EncodingMap&, const EncodingMap&) = default;
};

struct MachineSpec {
  MachineId id = MachineId::u33;
  std::string name;
  std::vector<Glyph> alphabet;
  TransitionTable table;
  std::vector<Symbol> left_blank;
  std::vector<Symbol> right_blank;
  std::vector<Symbol> left_turn_word;
  std::vector<Symbol> right_turn_word;
  /// Fired (while moving right) exactly when a simulated timestep completes.
  TransitionRule turn_rule_right;
  EncodingMap encoding;
  std::vector<Symbol> initial_center;
  Index initial_origin = 0;

  [[nodiscard]] int state_count() const { return table.state_count(); }
  [[nodiscard]] int symbol_count() const { return table.symbol_count(); }

  [[nodiscard]] Symbol symbol(std::string_view plain) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i].plain == plain) return Symbol{static_cast<std::uint8_t>(i)};
    }
    throw std::invalid_argument("symbol '" + std::string(plain) + "' not in alphabet of " + name);
  }

  /// Parses a plain-glyph word such as "0~1" or "001b".
  [[nodiscard]] std::vector<Symbol> word(std::string_view plain) const {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < plain.size();) {
      const std::size_t n = (i + 1 < plain.size() && plain[i + 1] == '~') ? 2 : 1;
      out.push_back(symbol(plain.substr(i, n)));
      i += n;
    }
    return out;
  }

  [[nodiscard]] std::string plain(std::span<const Symbol> w) const {
    std::string s;
    for (Symbol x : w) s += alphabet.at(x.id).plain;
    return s;
  }
  [[nodiscard]] std::string display(std::span<const Symbol> w) const {
    std::string s;
    for (Symbol x : w) s += alphabet.at(x.id).display;
    return s;
  }

  friend bool operator==(const MachineSpec&, const MachineSpec&) = default;
};

namespace detail {

inline const Glyph glyph_0{"0", "0"};
inline const Glyph glyph_1{"1", "1"};
inline const Glyph glyph_b{"b", "b"};
inline const Glyph glyph_0bar{"0̄", "0~"};
inline const Glyph glyph_1bar{"1̄", "1~"};

struct RuleText {
  int state;
  const char* read;
  const char* write;
  char move;
  int next;
};

inline MachineSpec assemble(MachineId id, std::string name, std::vector<Glyph> alphabet, int states,
                            std::initializer_list<RuleText> rules) {
  MachineSpec m;
  m.id = id;
  m.name = std::move(name);
  m.alphabet = std::move(alphabet);
  m.table = TransitionTable(states, static_cast<int>(m.alphabet.size()));
  for (const auto& r : rules) {
    m.table.set({State{static_cast<std::uint8_t>(r.state)}, m.symbol(r.read), m.symbol(r.write),
                 r.move == 'L' ? Move::left : Move::right, State{static_cast<std::uint8_t>(r.next)}});
  }
  return m;
}

inline std::map<std::vector<Symbol>, Cell> group_map(const MachineSpec& m,
                                                     std::initializer_list<std::pair<const char*, int>> entries) {
  std::map<std::vector<Symbol>, Cell> out;
  for (const auto& [w, v] : entries) out.emplace(m.word(w), to_cell(v));
  return out;
}

inline MachineSpec make_u33() {
  MachineSpec m = assemble(MachineId::u33, "U(3,3)", {glyph_0, glyph_1, glyph_b}, 3,
                           {
                               {1, "0", "1", 'L', 1}, {1, "1", "b", 'L', 2}, {1, "b", "b", 'L', 3},
                               {2, "0", "0", 'R', 1}, {2, "1", "1", 'L', 2},
                               {3, "0", "b", 'L', 1}, {3, "1", "0", 'R', 3}, {3, "b", "1", 'R', 3},
                           });
  m.left_blank = m.word("001b");
  m.right_blank = m.word("0b110b");
  m.left_turn_word = m.word("1b0");
  m.right_turn_word = m.word("0");
  m.turn_rule_right = *m.table.find(State{3}, m.symbol("0"));
  m.encoding.group_size = 1;
  // The 1 that opens a "1b0" stands for a 0.
  m.encoding.left = {group_map(m, {{"0", 0}, {"1", 1}, {"b", 1}}), {{m.word("1b0"), cells("010")}}};
  m.encoding.right = {group_map(m, {{"0", 1}, {"1", 0}, {"b", 1}}), {}};
  m.initial_center = m.word("0001");
  m.initial_origin = -3;
  return m;
}

inline MachineSpec make_u24() {
  MachineSpec m = assemble(MachineId::u24, "U(2,4)", {glyph_0, glyph_1, glyph_0bar, glyph_1bar}, 2,
                           {
                               {1, "0", "0~", 'L', 1}, {1, "1", "1~", 'L', 2}, {1, "0~", "1~", 'L', 1},
                               {1, "1~", "1~", 'L', 1},
                               {2, "0", "1~", 'R', 1}, {2, "1", "0~", 'L', 2}, {2, "0~", "0", 'R', 2},
                               {2, "1~", "1", 'R', 2},
                           });
  m.left_blank = m.word("000~1");
  m.right_blank = m.word("01~0~0~01~");
  m.left_turn_word = m.word("0~1");
  m.right_turn_word = m.word("0");
  m.turn_rule_right = *m.table.find(State{2}, m.symbol("0"));
  m.encoding.group_size = 1;
  m.encoding.left = {group_map(m, {{"0", 0}, {"0~", 0}, {"1", 1}, {"1~", 1}}), {}};
  m.encoding.right = {group_map(m, {{"0~", 0}, {"1~", 1}, {"0", 1}}), {}};
  m.initial_center = m.word("0001");
  m.initial_origin = -3;
  return m;
}

inline MachineSpec make_u62() {
  MachineSpec m = assemble(MachineId::u62, "U(6,2)", {glyph_0, glyph_1}, 6,
                           {
                               {1, "0", "0", 'L', 1}, {1, "1", "1", 'L', 2},
                               {2, "0", "0", 'L', 6}, {2, "1", "0", 'L', 3},
                               {3, "0", "0", 'R', 2}, {3, "1", "1", 'L', 3},
                               {4, "0", "1", 'R', 5}, {4, "1", "0", 'R', 6},
                               {5, "0", "1", 'L', 4}, {5, "1", "1", 'R', 4},
                               {6, "0", "1", 'L', 1}, {6, "1", "0", 'R', 4},
                           });
  m.left_blank = m.word("00000101");
  m.right_blank = m.word("100100001001");
  m.left_turn_word = m.word("010100");
  m.right_turn_word = m.word("10");
  // Reading the "0" of a "10" that was entered from the left.
  m.turn_rule_right = *m.table.find(State{6}, m.symbol("0"));
  m.encoding.group_size = 2;
  m.encoding.left = {group_map(m, {{"00", 0}, {"11", 1}}), {{m.word("010100"), cells("010")}}};
  m.encoding.right = {group_map(m, {{"00", 0}, {"01", 1}, {"10", 1}}), {}};
  m.initial_center = m.word("00000011");
  m.initial_origin = -7;
  return m;
}

}  // namespace detail

inline const MachineSpec& machine_spec(MachineId id) {
  static const MachineSpec u33 = detail::make_u33();
  static const MachineSpec u24 = detail::make_u24();
  static const MachineSpec u62 = detail::make_u62();
  switch (id) {
    case MachineId::u33: return u33;
    case MachineId::u24: return u24;
    case MachineId::u62: return u62;
  }
  throw std::invalid_argument("unknown machine id");
}

/// Encodes ether row c_0 around cell 0, head on cell 0, state u1.
inline TmConfiguration initial_configuration(const MachineSpec& m) {
  return TmConfiguration{State{1}, 0, Tape(m.left_blank, m.initial_center, m.initial_origin, m.right_blank), 0, {}};
}
inline TmConfiguration initial_configuration(MachineId id) { return initial_configuration(machine_spec(id)); }

/// Tape cells holding Rule 110 cells `cells.first..cells.last`.
inline CellRange tape_span(const MachineSpec& m, const CellRange& cells) {
  const Index g = m.encoding.group_size;
  if (cells.empty()) return {};
  return {g * cells.first - (g - 1), g * cells.last};
}

class DecodeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reads the Rule 110 cells encoded on `span` of `tape` using one side's map.
/// Patterns may begin before the span or run past its end; the tape is read
/// as far as needed.
inline std::vector<Cell> decode_window(const MachineSpec& m, const Tape& tape, const CellRange& span, Side side) {
  const Index g = m.encoding.group_size;
  if (span.empty()) return {};
  if (detail::floor_mod(span.first + g - 1, g) != 0 || static_cast<Index>(span.size()) % g != 0) {
    throw std::invalid_argument("decode_window: span not aligned to " + std::to_string(g) + "-symbol groups");
  }
  const SideEncoding& enc = m.encoding.side(side);

  Index longest = g;
  for (const auto& p : enc.patterns) longest = std::max<Index>(longest, static_cast<Index>(p.word.size()));

  const std::size_t n_out = span.size() / static_cast<std::size_t>(g);
  std::vector<std::optional<Cell>> fixed(n_out);

  // Greedy left-to-right pattern scan, starting early enough to catch a
  // pattern that straddles the span's left edge.
  Index covered_until = span.first - longest;
  for (Index p = span.first - (longest - g); p <= span.last; p += g) {
    if (p < covered_until) continue;
    for (const auto& pat : enc.patterns) {
      const auto len = static_cast<Index>(pat.word.size());
      bool hit = true;
      for (Index k = 0; k < len && hit; ++k) hit = tape.read(p + k) == pat.word[static_cast<std::size_t>(k)];
      if (!hit) continue;
      for (Index q = p; q < p + len; q += g) {
        if (q >= span.first && q <= span.last) {
          fixed[static_cast<std::size_t>((q - span.first) / g)] = pat.cells[static_cast<std::size_t>((q - p) / g)];
        }
      }
      covered_until = p + len;
      break;
    }
  }

  std::vector<Cell> out;
  out.reserve(n_out);
  for (std::size_t j = 0; j < n_out; ++j) {
    if (fixed[j]) {
      out.push_back(*fixed[j]);
      continue;
    }
    const Index at = span.first + static_cast<Index>(j) * g;
    auto group = tape.read({at, at + g - 1});
    auto it = enc.groups.find(group);
    if (it == enc.groups.end()) {
      throw DecodeError("decode_window: '" + m.plain(group) + "' at tape index " + std::to_string(at) +
                        " has no " + (side == Side::left ? "left" : "right") + "-side meaning for " + m.name);
    }
    out.push_back(it->second);
  }
  return out;
}

/// Accepts the step that completes a simulated timestep: the machine's turn
/// rule firing during a right traversal.
inline StepPredicate checkpoint_predicate(const MachineSpec& m) {
  return [rule = m.turn_rule_right](const StepEvent& ev) {
    return ev.rule == rule && ev.arrived_moving == Move::right;
  };
}
inline StepPredicate checkpoint_predicate(MachineId id) { return checkpoint_predicate(machine_spec(id)); }

struct BoldWindow {
  CellRange cells;
  /// False only for the checkpoints whose comparison windows are printed
  /// alongside the reference traces.
  bool extrapolated = false;
};

/// Rule 110 cells that are fully simulated at checkpoint `k` (k >= 1).
///
/// The left edge gains one blank-word repetition (4 cells) per timestep. The
/// right edge first reaches cell 0, then alternately absorbs the "1100" and
/// "11" parts of each right blank repetition: 0, 4, 6, 10, 12, 16, ...
inline BoldWindow bold_window(MachineId id, int k) {
  if (k < 1) throw std::invalid_argument("bold_window: checkpoint ordinal must be >= 1");
  const Index left = -3 - 4 * static_cast<Index>(k);
  const Index right = k == 1 ? 0 : 6 * ((k - 2) / 2) + (k % 2 == 0 ? 4 : 6);
  int documented = 0;
  switch (id) {
    case MachineId::u33: documented = 3; break;
    case MachineId::u24: documented = 2; break;
    case MachineId::u62: documented = 1; break;
  }
  return {{left, right}, k > documented};
}

}  // namespace weakutm
