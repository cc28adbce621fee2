// Command-line front end: run, verify, profile, golden, rule110, dump.
//
// Exit codes: 0 ok, 1 mismatch or golden divergence, 2 cap exceeded,
// 3 undefined transition, 4 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>

#include "weakutm/json_io.hpp"
#include "weakutm/render.hpp"
#include "weakutm/weakutm.hpp"

using namespace weakutm;

namespace {

enum Exit { ok = 0, mismatch = 1, cap_exceeded = 2, undefined_transition = 3, usage = 4 };

const std::map<std::string, MachineId> kMachineNames{
    {"u33", MachineId::u33}, {"u24", MachineId::u24}, {"u62", MachineId::u62}};

std::string text_window(const MachineSpec& m, const TraceRecord& r) {
  std::string s;
  for (std::size_t i = 0; i < r.window.size(); ++i) {
    const Index at = r.from + static_cast<Index>(i);
    const std::string& g = m.alphabet.at(r.window[i].id).plain;
    s += at == r.head ? "[" + g + "]" : g;
  }
  return s;
}

CellRange parse_window(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re)) throw CLI::ValidationError("--window", "expected A..B, got '" + text + "'");
  return {std::stoll(mt[1]), std::stoll(mt[2])};
}

int cmd_run(MachineId id, std::uint64_t steps, bool with_trace, const std::string& format) {
  const MachineSpec& m = machine_spec(id);
  Trace t = trace(m, steps);
  if (!with_trace) t.steps.erase(t.steps.begin(), t.steps.end() - 1);
  if (format == "json") {
    std::cout << json(t).dump(2) << '\n';
    return ok;
  }
  for (const auto& r : t.steps) {
    std::cout << r.step << " u" << int(r.state.id) << " head=" << r.head << " from=" << r.from << ' '
              << text_window(m, r) << '\n';
  }
  return ok;
}

int cmd_verify(MachineId id, int k, std::uint64_t cap, bool as_json) {
  const auto reps = verify(id, k, cap);
  if (as_json) {
    std::cout << json(reps).dump(2) << '\n';
  } else {
    for (const auto& r : reps) {
      std::cout << "k=" << r.timestep << " steps=" << r.cumulative_steps << " cells " << r.window.first << ".."
                << r.window.last << (r.extrapolated_window ? " (extrapolated)" : "") << ' '
                << (r.match() ? "match" : "MISMATCH at " + std::to_string(*r.first_mismatch)) << '\n';
      if (!r.match()) std::cout << "  decoded " << to_string(r.decoded) << "\n  oracle  " << to_string(r.oracle) << '\n';
    }
  }
  return all_match(reps) ? ok : mismatch;
}

int cmd_profile(MachineId id, int k, std::uint64_t cap, bool as_json) {
  const auto p = profile(id, k, cap);
  if (as_json) {
    std::cout << json(p).dump(2) << '\n';
    return ok;
  }
  for (std::size_t i = 0; i < p.per_timestep.size(); ++i) {
    std::cout << "k=" << i + 1 << " cost=" << p.per_timestep[i] << " total=" << p.cumulative[i] << '\n';
  }
  std::printf("fit: cost ~ %.4f k %+.4f, R^2 = %.6f\n", p.fit.slope, p.fit.intercept, p.fit.r_squared);
  return ok;
}

int cmd_golden(MachineId id) {
  const auto g = golden_trace_check(id);
  if (g.passed()) {
    std::cout << to_string(id) << ": " << g.frames_checked << " frames match\n";
    return ok;
  }
  const auto& d = *g.divergence;
  std::cout << to_string(id) << ": divergence at step " << d.step << " in " << d.field << "\n  expected " << d.expected
            << "\n  actual   " << d.actual << '\n';
  return mismatch;
}

int cmd_rule110(std::uint64_t steps, const std::string& window_text, const std::string& render,
                const std::string& seed, const std::string& output) {
  const CellRange w = parse_window(window_text);
  const Rule110Config start = seed.empty() ? ether_config(0) : Rule110Config({Cell::zero}, cells(seed), 0, {Cell::zero});
  const auto rows = spacetime(start, steps, w);
  const std::string out = render == "ppm" ? render_ppm(rows) : render_ascii(rows, {true, w.first});
  if (output.empty() || output == "-") {
    std::cout << out;
    if (render != "ppm" && !out.empty()) std::cout << '\n';
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + output);
    f << out;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small universal Turing machines simulating Rule 110"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  MachineId id = MachineId::u33;
  std::uint64_t steps = 0;
  int timesteps = 0;
  std::uint64_t cap = default_cap_per_timestep;
  bool with_trace = false;
  bool as_json = false;
  std::string format = "text";
  std::string window;
  std::string render = "ascii";
  std::string seed;
  std::string output;

  const auto machine_arg = [&](CLI::App* sub) {
    sub->add_option("machine", id, "u33, u24 or u62")->required()->transform(CLI::CheckedTransformer(kMachineNames));
  };

  auto* run_cmd = app.add_subcommand("run", "Run a machine from its initial configuration");
  machine_arg(run_cmd);
  run_cmd->add_option("--steps", steps, "Number of steps")->required();
  run_cmd->add_flag("--trace", with_trace, "Print every configuration, not only the last");
  run_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Compare decoded checkpoints with the Rule 110 oracle");
  machine_arg(verify_cmd);
  verify_cmd->add_option("--timesteps", timesteps)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--cap", cap, "Step cap per simulated timestep")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", as_json);

  auto* profile_cmd = app.add_subcommand("profile", "Step cost per simulated timestep");
  machine_arg(profile_cmd);
  profile_cmd->add_option("--timesteps", timesteps)->required()->check(CLI::Range(2, 1 << 20));
  profile_cmd->add_option("--cap", cap)->check(CLI::PositiveNumber);
  profile_cmd->add_flag("--json", as_json);

  auto* golden_cmd = app.add_subcommand("golden", "Replay the reference trace");
  machine_arg(golden_cmd);

  auto* rule110_cmd = app.add_subcommand("rule110", "Spacetime diagram, starting from the ether unless --seed is given");
  rule110_cmd->add_option("--steps", steps)->required();
  rule110_cmd->add_option("--window", window, "Cell range A..B")->required();
  rule110_cmd->add_option("--render", render)->check(CLI::IsMember({"ascii", "ppm"}));
  rule110_cmd->add_option("--seed", seed, "Row written at cell 0 on a zero background");
  rule110_cmd->add_option("-o,--output", output, "Output file, default stdout");

  auto* dump_cmd = app.add_subcommand("dump", "Machine definition as JSON");
  machine_arg(dump_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*run_cmd) return cmd_run(id, steps, with_trace, format);
    if (*verify_cmd) return cmd_verify(id, timesteps, cap, as_json);
    if (*profile_cmd) return cmd_profile(id, timesteps, cap, as_json);
    if (*golden_cmd) return cmd_golden(id);
    if (*rule110_cmd) return cmd_rule110(steps, window, render, seed, output);
    if (*dump_cmd) {
      std::cout << machine_to_json(machine_spec(id)).dump(2) << '\n';
      return ok;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cap_exceeded;
  } catch (const UndefinedTransition& e) {
    std::cerr << "error: " << e.what() << '\n';
    return undefined_transition;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
