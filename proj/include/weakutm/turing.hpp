#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weak_tape.hpp"

namespace weakutm {

/// Index into a machine's alphabet.
struct Symbol {
  std::uint8_t id = 0;
  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Machine state, numbered from 1 (u1, u2, ...).
struct State {
  std::uint8_t id = 1;
  friend constexpr auto operator<=>(const State&, const State&) = default;
};

enum class Move : std::int8_t { left = -1, right = 1 };

constexpr Index offset(Move m) { return static_cast<Index>(m); }
constexpr char move_char(Move m) { return m == Move::left ? 'L' : 'R'; }

struct TransitionRule {
  State read_state;
  Symbol read_symbol;
  Symbol write_symbol;
  Move move = Move::left;
  State next_state;

  friend constexpr bool operator==(const TransitionRule&, const TransitionRule&) = default;
};

/// Dense (state, symbol) table. Missing entries stay missing: looking one up
/// is a simulation fault, never an implicit halt.
class TransitionTable {
 public:
  TransitionTable() = default;
  TransitionTable(int states, int symbols)
      : states_(states), symbols_(symbols), cells_(static_cast<std::size_t>(states * symbols)) {
    if (states <= 0 || symbols <= 0) throw std::invalid_argument("TransitionTable: empty dimensions");
  }

  [[nodiscard]] int state_count() const { return states_; }
  [[nodiscard]] int symbol_count() const { return symbols_; }

  void set(const TransitionRule& rule) {
    check(rule.read_state, rule.read_symbol);
    check(rule.next_state, rule.write_symbol);
    cells_[slot(rule.read_state, rule.read_symbol)] = rule;
  }

  [[nodiscard]] const std::optional<TransitionRule>& find(State q, Symbol s) const {
    check(q, s);
    return cells_[slot(q, s)];
  }

  /// Defined rules in state-major, symbol-minor order.
  [[nodiscard]] std::vector<TransitionRule> rules() const {
    std::vector<TransitionRule> out;
    for (const auto& c : cells_) {
      if (c) out.push_back(*c);
    }
    return out;
  }

  [[nodiscard]] std::size_t defined_count() const { return rules().size(); }

  friend bool operator==(const TransitionTable&, const TransitionTable&) = default;

 private:
  void check(State q, Symbol s) const {
    if (q.id < 1 || q.id > states_ || s.id >= symbols_) throw std::out_of_range("TransitionTable: id out of range");
  }
  [[nodiscard]] std::size_t slot(State q, Symbol s) const {
    return static_cast<std::size_t>((q.id - 1) * symbols_ + s.id);
  }

  int states_ = 0;
  int symbols_ = 0;
  std::vector<std::optional<TransitionRule>> cells_;
};

using Tape = WeakTape<Symbol>;

struct TmConfiguration {
  State state;
  Index head = 0;
  Tape tape;
  std::uint64_t steps_taken = 0;
  /// Direction of the most recent step, if any. Lets checkpoint predicates
  /// tell which traversal a rule fired in.
  std::optional<Move> last_move;

  friend bool operator==(const TmConfiguration&, const TmConfiguration&) = default;
};

struct StepEvent {
  TransitionRule rule;
  Index head_before = 0;
  Index head_after = 0;
  /// Cumulative step count once this step is done (1 for the first step).
  std::uint64_t step = 0;
  /// How the head arrived at the cell it just read.
  std::optional<Move> arrived_moving;

  friend bool operator==(const StepEvent&, const StepEvent&) = default;
};

using StepPredicate = std::function<bool(const StepEvent&)>;

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndefinedTransition : public SimulationError {
 public:
  UndefinedTransition(State q, Symbol s, std::uint64_t at_step)
      : SimulationError("no transition for (u" + std::to_string(q.id) + ", symbol " + std::to_string(s.id) +
                        ") at step " + std::to_string(at_step)),
        state(q),
        symbol(s),
        step(at_step) {}

  State state;
  Symbol symbol;
  /// 1-based index of the step that could not be taken.
  std::uint64_t step;
};

class CapExceeded : public SimulationError {
 public:
  explicit CapExceeded(std::uint64_t cap_steps)
      : SimulationError("step cap of " + std::to_string(cap_steps) + " exceeded"), cap(cap_steps) {}
  std::uint64_t cap;
};

/// Takes one step in place. On UndefinedTransition `config` is untouched.
inline StepEvent step(const TransitionTable& table, TmConfiguration& config) {
  const Symbol read = config.tape.read(config.head);
  const auto& rule = table.find(config.state, read);
  if (!rule) throw UndefinedTransition(config.state, read, config.steps_taken + 1);

  StepEvent ev{*rule, config.head, config.head + offset(rule->move), config.steps_taken + 1, config.last_move};
  config.tape.write(config.head, rule->write_symbol);
  config.head = ev.head_after;
  config.state = rule->next_state;
  config.steps_taken = ev.step;
  config.last_move = rule->move;
  return ev;
}

inline TmConfiguration run(const TransitionTable& table, TmConfiguration config, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) step(table, config);
  return config;
}

struct RunUntilResult {
  TmConfiguration config;
  std::uint64_t steps = 0;  // taken by this call
  StepEvent event;
};

/// Steps until `predicate` accepts a StepEvent and returns the configuration
/// right after that step. Throws CapExceeded after `cap` unmatched steps.
inline RunUntilResult run_until(const TransitionTable& table, TmConfiguration config, const StepPredicate& predicate,
                                std::uint64_t cap) {
  for (std::uint64_t n = 1; n <= cap; ++n) {
    StepEvent ev = step(table, config);
    if (predicate(ev)) return {std::move(config), n, ev};
  }
  throw CapExceeded(cap);
}

struct TapeDiff {
  CellRange span;
  std::vector<Symbol> symbols;
};

/// Smallest span outside which the tape is whole repetitions of its blank
/// words, with the symbols inside it.
inline TapeDiff diff_from_background(const Tape& tape) {
  TapeDiff d{tape.non_background_span(), {}};
  d.symbols = tape.read(d.span);
  return d;
}

}  // namespace weakutm
