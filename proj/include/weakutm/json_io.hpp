#pragma once

// JSON forms of machine definitions, checkpoint/profile reports and traces.
// Tape symbols appear as plain glyphs ("0~" for 0 with overline) in machine
// dumps and as display glyphs in traces; Rule 110 cells as '0'/'1' strings.

#include <json.hpp>

#include "harness.hpp"
#include "machines.hpp"

namespace weakutm {

using json = nlohmann::json;

inline void to_json(json& j, MachineId id) { j = to_string(id); }
inline void from_json(const json& j, MachineId& id) { id = parse_machine_id(j.get<std::string>()); }

inline void to_json(json& j, const CellRange& r) { j = json{{"from", r.first}, {"to", r.last}}; }
inline void from_json(const json& j, CellRange& r) {
  j.at("from").get_to(r.first);
  j.at("to").get_to(r.last);
}

namespace detail {

inline std::string state_name(State q) { return "u" + std::to_string(q.id); }

inline State parse_state(const std::string& s) {
  if (s.size() < 2 || s[0] != 'u') throw std::invalid_argument("bad state name '" + s + "'");
  return State{static_cast<std::uint8_t>(std::stoi(s.substr(1)))};
}

inline json rule_json(const MachineSpec& m, const TransitionRule& r) {
  return json{{"state", state_name(r.read_state)},
              {"read", m.alphabet.at(r.read_symbol.id).plain},
              {"write", m.alphabet.at(r.write_symbol.id).plain},
              {"move", std::string(1, move_char(r.move))},
              {"next", state_name(r.next_state)}};
}

inline TransitionRule parse_rule(const MachineSpec& m, const json& j) {
  const auto mv = j.at("move").get<std::string>();
  if (mv != "L" && mv != "R") throw std::invalid_argument("bad move '" + mv + "'");
  return {parse_state(j.at("state").get<std::string>()), m.symbol(j.at("read").get<std::string>()),
          m.symbol(j.at("write").get<std::string>()), mv == "L" ? Move::left : Move::right,
          parse_state(j.at("next").get<std::string>())};
}

inline json side_json(const MachineSpec& m, const SideEncoding& e) {
  json groups = json::object();
  for (const auto& [word, cell] : e.groups) groups[m.plain(word)] = to_int(cell) ? "1" : "0";
  json patterns = json::array();
  for (const auto& p : e.patterns) patterns.push_back({{"word", m.plain(p.word)}, {"cells", to_string(p.cells)}});
  return json{{"groups", groups}, {"patterns", patterns}};
}

inline SideEncoding parse_side(const MachineSpec& m, const json& j) {
  SideEncoding e;
  for (const auto& [word, cell] : j.at("groups").items()) e.groups.emplace(m.word(word), cells(cell.get<std::string>()).at(0));
  for (const auto& p : j.at("patterns")) {
    e.patterns.push_back({m.word(p.at("word").get<std::string>()), cells(p.at("cells").get<std::string>())});
  }
  return e;
}

}  // namespace detail

/// Machine definition dump.
inline json machine_to_json(const MachineSpec& m) {
  json alphabet = json::array();
  for (std::size_t i = 0; i < m.alphabet.size(); ++i) {
    alphabet.push_back({{"id", i}, {"glyph", m.alphabet[i].display}, {"plain", m.alphabet[i].plain}});
  }
  json rules = json::array();
  json undefined = json::array();
  for (int q = 1; q <= m.state_count(); ++q) {
    for (int s = 0; s < m.symbol_count(); ++s) {
      const State st{static_cast<std::uint8_t>(q)};
      const Symbol sy{static_cast<std::uint8_t>(s)};
      if (const auto& r = m.table.find(st, sy)) {
        rules.push_back(detail::rule_json(m, *r));
      } else {
        undefined.push_back({{"state", detail::state_name(st)}, {"read", m.alphabet[sy.id].plain}});
      }
    }
  }
  return json{
      {"machine", m.id},
      {"name", m.name},
      {"states", m.state_count()},
      {"symbols", m.symbol_count()},
      {"alphabet", alphabet},
      {"rules", rules},
      {"undefined", undefined},
      {"left_blank", m.plain(m.left_blank)},
      {"right_blank", m.plain(m.right_blank)},
      {"left_turn_word", m.plain(m.left_turn_word)},
      {"right_turn_word", m.plain(m.right_turn_word)},
      {"turn_rule", detail::rule_json(m, m.turn_rule_right)},
      {"encoding",
       {{"group_size", m.encoding.group_size},
        {"left", detail::side_json(m, m.encoding.left)},
        {"right", detail::side_json(m, m.encoding.right)}}},
      {"initial", {{"center", m.plain(m.initial_center)}, {"origin", m.initial_origin}, {"head", 0}, {"state", "u1"}}},
  };
}

inline MachineSpec machine_from_json(const json& j) {
  MachineSpec m;
  m.id = j.at("machine").get<MachineId>();
  m.name = j.at("name").get<std::string>();
  for (const auto& g : j.at("alphabet")) m.alphabet.push_back({g.at("glyph").get<std::string>(), g.at("plain").get<std::string>()});
  m.table = TransitionTable(j.at("states").get<int>(), static_cast<int>(m.alphabet.size()));
  for (const auto& r : j.at("rules")) m.table.set(detail::parse_rule(m, r));
  m.left_blank = m.word(j.at("left_blank").get<std::string>());
  m.right_blank = m.word(j.at("right_blank").get<std::string>());
  m.left_turn_word = m.word(j.at("left_turn_word").get<std::string>());
  m.right_turn_word = m.word(j.at("right_turn_word").get<std::string>());
  m.turn_rule_right = detail::parse_rule(m, j.at("turn_rule"));
  const auto& enc = j.at("encoding");
  m.encoding.group_size = enc.at("group_size").get<int>();
  m.encoding.left = detail::parse_side(m, enc.at("left"));
  m.encoding.right = detail::parse_side(m, enc.at("right"));
  m.initial_center = m.word(j.at("initial").at("center").get<std::string>());
  m.initial_origin = j.at("initial").at("origin").get<Index>();
  return m;
}

inline void to_json(json& j, const CheckpointReport& r) {
  j = json{{"machine", r.machine},
           {"timestep", r.timestep},
           {"cumulative_steps", r.cumulative_steps},
           {"window", r.window},
           {"extrapolated_window", r.extrapolated_window},
           {"decoded", to_string(r.decoded)},
           {"oracle", to_string(r.oracle)},
           {"verdict", r.match() ? "match" : "mismatch"}};
  if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
}

inline void from_json(const json& j, CheckpointReport& r) {
  j.at("machine").get_to(r.machine);
  j.at("timestep").get_to(r.timestep);
  j.at("cumulative_steps").get_to(r.cumulative_steps);
  j.at("window").get_to(r.window);
  j.at("extrapolated_window").get_to(r.extrapolated_window);
  r.decoded = cells(j.at("decoded").get<std::string>());
  r.oracle = cells(j.at("oracle").get<std::string>());
  r.first_mismatch.reset();
  if (j.contains("first_mismatch")) r.first_mismatch = j.at("first_mismatch").get<Index>();
}

inline void to_json(json& j, const LinearFit& f) {
  j = json{{"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}};
}
inline void from_json(const json& j, LinearFit& f) {
  j.at("slope").get_to(f.slope);
  j.at("intercept").get_to(f.intercept);
  j.at("r_squared").get_to(f.r_squared);
}

inline void to_json(json& j, const ProfileReport& p) {
  j = json{{"machine", p.machine}, {"per_timestep", p.per_timestep}, {"cumulative", p.cumulative}, {"fit", p.fit}};
}
inline void from_json(const json& j, ProfileReport& p) {
  j.at("machine").get_to(p.machine);
  j.at("per_timestep").get_to(p.per_timestep);
  j.at("cumulative").get_to(p.cumulative);
  j.at("fit").get_to(p.fit);
}

/// {machine, steps:[{i, state, head, window:{from, glyphs}}]}
inline void to_json(json& j, const Trace& t) {
  const MachineSpec& m = machine_spec(t.machine);
  json steps = json::array();
  for (const auto& r : t.steps) {
    json glyphs = json::array();
    for (Symbol s : r.window) glyphs.push_back(m.alphabet.at(s.id).display);
    steps.push_back({{"i", r.step},
                     {"state", detail::state_name(r.state)},
                     {"head", r.head},
                     {"window", {{"from", r.from}, {"glyphs", glyphs}}}});
  }
  j = json{{"machine", t.machine}, {"steps", steps}};
}

inline void from_json(const json& j, Trace& t) {
  j.at("machine").get_to(t.machine);
  const MachineSpec& m = machine_spec(t.machine);
  auto by_display = [&](const std::string& g) {
    for (std::size_t i = 0; i < m.alphabet.size(); ++i) {
      if (m.alphabet[i].display == g) return Symbol{static_cast<std::uint8_t>(i)};
    }
    throw std::invalid_argument("unknown glyph '" + g + "'");
  };
  t.steps.clear();
  for (const auto& s : j.at("steps")) {
    TraceRecord r;
    s.at("i").get_to(r.step);
    r.state = detail::parse_state(s.at("state").get<std::string>());
    s.at("head").get_to(r.head);
    s.at("window").at("from").get_to(r.from);
    for (const auto& g : s.at("window").at("glyphs")) r.window.push_back(by_display(g.get<std::string>()));
    t.steps.push_back(std::move(r));
  }
}

}  // namespace weakutm
