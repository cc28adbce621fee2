#include <sstream>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "weakutm/machines.hpp"

using namespace weakutm;

namespace {

// Reference tables, row per symbol, column per state; "-" marks a blank cell.
std::vector<std::vector<std::string>> reference_table(MachineId id) {
  switch (id) {
    case MachineId::u33:
      return {{"1Lu1", "0Ru1", "bLu1"}, {"bLu2", "1Lu2", "0Ru3"}, {"bLu3", "-", "1Ru3"}};
    case MachineId::u24:
      return {{"0~Lu1", "1~Ru1"}, {"1~Lu2", "0~Lu2"}, {"1~Lu1", "0Ru2"}, {"1~Lu1", "1Ru2"}};
    case MachineId::u62:
      return {{"0Lu1", "0Lu6", "0Ru2", "1Ru5", "1Lu4", "1Lu1"}, {"1Lu2", "0Lu3", "1Lu3", "0Ru6", "1Ru4", "0Ru4"}};
  }
  return {};
}

std::string entry_text(const MachineSpec& m, const std::optional<TransitionRule>& r) {
  if (!r) return "-";
  std::ostringstream os;
  os << m.alphabet[r->write_symbol.id].plain << move_char(r->move) << 'u' << int(r->next_state.id);
  return os.str();
}

// Pure background with the seam just after the initial head cell, where a
// U(6,2) cell pair ends.
Tape background_only(const MachineSpec& m) { return Tape(m.left_blank, {}, 1, m.right_blank); }

}  // namespace

TEST_CASE("tables match the reference tables", "[machines]") {
  const std::pair<MachineId, std::pair<int, int>> sizes[] = {
      {MachineId::u33, {3, 3}}, {MachineId::u24, {2, 4}}, {MachineId::u62, {6, 2}}};
  for (const auto& [id, dims] : sizes) {
    const auto& m = machine_spec(id);
    INFO(m.name);
    CHECK(m.state_count() == dims.first);
    CHECK(m.symbol_count() == dims.second);
    const auto rows = reference_table(id);
    for (int s = 0; s < m.symbol_count(); ++s) {
      for (int q = 1; q <= m.state_count(); ++q) {
        CHECK(entry_text(m, m.table.find(State{static_cast<std::uint8_t>(q)}, Symbol{static_cast<std::uint8_t>(s)})) ==
              rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(q - 1)]);
      }
    }
  }
  CHECK(machine_spec(MachineId::u33).table.defined_count() == 8);
  CHECK(machine_spec(MachineId::u24).table.defined_count() == 8);
  CHECK(machine_spec(MachineId::u62).table.defined_count() == 12);

  const auto& u33 = machine_spec(MachineId::u33);
  CHECK_FALSE(u33.table.find(State{2}, u33.symbol("b")).has_value());
}

TEST_CASE("blank and turn words", "[machines]") {
  const auto& u33 = machine_spec(MachineId::u33);
  CHECK(u33.plain(u33.left_blank) == "001b");
  CHECK(u33.plain(u33.right_blank) == "0b110b");
  CHECK(u33.plain(u33.left_turn_word) == "1b0");
  CHECK(u33.plain(u33.right_turn_word) == "0");

  const auto& u24 = machine_spec(MachineId::u24);
  CHECK(u24.plain(u24.left_blank) == "000~1");
  CHECK(u24.plain(u24.right_blank) == "01~0~0~01~");
  CHECK(u24.display(u24.left_blank) == "000̄1");
  CHECK(u24.plain(u24.left_turn_word) == "0~1");

  const auto& u62 = machine_spec(MachineId::u62);
  CHECK(u62.plain(u62.left_blank) == "00000101");
  CHECK(u62.plain(u62.right_blank) == "100100001001");
  CHECK(u62.plain(u62.left_turn_word) == "010100");
  CHECK(u62.plain(u62.right_turn_word) == "10");
}

TEST_CASE("machine ids", "[machines]") {
  CHECK(parse_machine_id("u62") == MachineId::u62);
  CHECK_THROWS_AS(parse_machine_id("u44"), std::invalid_argument);
  CHECK_THROWS_AS(machine_spec(MachineId::u33).symbol("2"), std::invalid_argument);
}

TEST_CASE("initial configurations", "[machines]") {
  for (MachineId id : all_machines) {
    const auto c = initial_configuration(id);
    CHECK(c.state == State{1});
    CHECK(c.head == 0);
    CHECK(c.steps_taken == 0);
  }
  const auto& u62 = machine_spec(MachineId::u62);
  const auto c62 = initial_configuration(u62);
  CHECK(u62.plain(c62.tape.read(CellRange{-7, 0})) == "00000011");
  CHECK(c62.tape.read(0) == u62.symbol("1"));

  for (MachineId id : all_machines) {
    const auto& m = machine_spec(id);
    const auto c = initial_configuration(m);
    INFO(m.name);
    CHECK(decode_window(m, c.tape, tape_span(m, {-3, 0}), Side::left) == ether_row(0, {-3, 0}));
  }
}

TEST_CASE("blank words decode to the ether background", "[machines]") {
  for (MachineId id : all_machines) {
    const auto& m = machine_spec(id);
    INFO(m.name);
    const Tape t = background_only(m);
    const auto nl = static_cast<Index>(m.left_blank.size());
    const auto nr = static_cast<Index>(m.right_blank.size());
    // Left repetitions are read one back from the seam: the U(6,2) word only
    // decodes when the next repetition completes its turn word.
    CHECK(to_string(decode_window(m, t, {1 - 2 * nl, -nl}, Side::left)) == "0001");
    CHECK(to_string(decode_window(m, t, {1 - 6 * nl, -nl}, Side::left)) == "00010001000100010001");
    CHECK(to_string(decode_window(m, t, {1, nr}, Side::right)) == "110011");
  }
}

TEST_CASE("decode exceptions", "[machines]") {
  const auto& u33 = machine_spec(MachineId::u33);
  SECTION("the 1 of 1b0 reads as 0") {
    const Tape t(u33.left_blank, u33.word("1b0"), 0, u33.right_blank);
    CHECK(to_string(decode_window(u33, t, {0, 2}, Side::left)) == "010");
    const Tape lone(u33.left_blank, u33.word("1bb"), 0, u33.right_blank);
    CHECK(to_string(decode_window(u33, lone, {0, 2}, Side::left)) == "111");
  }
  SECTION("U(6,2) left turn word straddling the window edge") {
    const auto& u62 = machine_spec(MachineId::u62);
    const Tape t(u62.left_blank, u62.word("00"), 1, u62.right_blank);
    // Repetition at tape -7..0 is 00 00 01 01, and the turn word continues
    // into the 00 at 1..2. Start the window on the second 01.
    CHECK(to_string(decode_window(u62, t, {-1, 2}, Side::left)) == "10");
  }
}

TEST_CASE("decode errors", "[machines]") {
  const auto& u62 = machine_spec(MachineId::u62);
  const Tape t62 = background_only(u62);
  CHECK_THROWS_AS(decode_window(u62, t62, {0, 1}, Side::left), std::invalid_argument);
  CHECK_THROWS_AS(decode_window(u62, t62, {-1, 1}, Side::left), std::invalid_argument);
  const Tape ones(u62.word("11"), u62.word("11"), -1, u62.word("11"));
  CHECK_THROWS_AS(decode_window(u62, ones, {1, 2}, Side::right), DecodeError);

  const auto& u24 = machine_spec(MachineId::u24);
  const Tape t24(u24.left_blank, u24.word("1"), 0, u24.right_blank);
  CHECK_THROWS_AS(decode_window(u24, t24, {0, 0}, Side::right), DecodeError);
  CHECK(decode_window(u24, t24, {0, 0}, Side::left) == cells("1"));
  CHECK(decode_window(u24, t24, {1, 0}, Side::left).empty());
}

TEST_CASE("checkpoint predicates", "[machines]") {
  const auto firsts = [](MachineId id, int n) {
    const auto& m = machine_spec(id);
    auto c = initial_configuration(m);
    std::vector<std::uint64_t> out;
    for (int k = 0; k < n; ++k) {
      auto r = run_until(m.table, std::move(c), checkpoint_predicate(m), 100000);
      c = std::move(r.config);
      out.push_back(c.steps_taken);
    }
    return out;
  };
  CHECK(firsts(MachineId::u33, 3) == std::vector<std::uint64_t>{14, 44, 92});
  CHECK(firsts(MachineId::u24, 2) == std::vector<std::uint64_t>{14, 44});
  CHECK(firsts(MachineId::u62, 1) == std::vector<std::uint64_t>{29});

  // Same counts from the naive simulator.
  CHECK(oracle::turn_steps(oracle::u33_text(), {3, '0'}, 3) == std::vector<std::uint64_t>{14, 44, 92});
  CHECK(oracle::turn_steps(oracle::u24_text(), {2, '0'}, 2) == std::vector<std::uint64_t>{14, 44});
  CHECK(oracle::turn_steps(oracle::u62_text(), {6, '0'}, 1) == std::vector<std::uint64_t>{29});
}

TEST_CASE("bold windows", "[machines]") {
  CHECK(bold_window(MachineId::u33, 1).cells == CellRange{-7, 0});
  CHECK(bold_window(MachineId::u33, 2).cells == CellRange{-11, 4});
  CHECK(bold_window(MachineId::u33, 3).cells == CellRange{-15, 6});
  CHECK_FALSE(bold_window(MachineId::u33, 3).extrapolated);
  CHECK(bold_window(MachineId::u33, 4).extrapolated);
  CHECK(bold_window(MachineId::u24, 2).cells == CellRange{-11, 4});
  CHECK(bold_window(MachineId::u24, 3).extrapolated);
  CHECK(bold_window(MachineId::u62, 1).cells == CellRange{-7, 0});
  CHECK(bold_window(MachineId::u62, 2).extrapolated);

  const Index rights[] = {0, 4, 6, 10, 12, 16, 18, 22};
  for (int k = 1; k <= 8; ++k) {
    const auto w = bold_window(MachineId::u62, k).cells;
    CHECK(w.first == -3 - 4 * k);
    CHECK(w.last == rights[k - 1]);
  }
  CHECK_THROWS_AS(bold_window(MachineId::u33, 0), std::invalid_argument);

  CHECK(tape_span(machine_spec(MachineId::u62), {-7, 0}) == CellRange{-15, 0});
  CHECK(tape_span(machine_spec(MachineId::u33), {-7, 0}) == CellRange{-7, 0});
}
