#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden_traces.hpp"
#include "machines.hpp"
#include "rule110.hpp"
#include "turing.hpp"

namespace weakutm {

inline constexpr std::uint64_t default_cap_per_timestep = 1'000'000;

struct CheckpointReport {
  MachineId machine = MachineId::u33;
  int timestep = 0;  // k: the tape now encodes row c_k
  std::uint64_t cumulative_steps = 0;
  CellRange window;
  bool extrapolated_window = false;
  std::vector<Cell> decoded;
  std::vector<Cell> oracle;
  /// Cell index of the first disagreement, if any.
  std::optional<Index> first_mismatch;

  [[nodiscard]] bool match() const { return !first_mismatch; }
  friend bool operator==(const CheckpointReport&, const CheckpointReport&) = default;
};

/// State handed to checkpoint observers.
struct Checkpoint {
  int timestep;
  const TmConfiguration& config;
  const StepEvent& event;
  const Rule110Config& oracle;  // ether evolved `timestep` steps from c_0
};

using CheckpointObserver = std::function<void(const Checkpoint&)>;

/// Runs `m` from its initial configuration through `timesteps` checkpoints,
/// comparing the decoded bold window against the Rule 110 oracle at each.
/// `cap` bounds the steps spent on any single timestep.
inline std::vector<CheckpointReport> verify(const MachineSpec& m, int timesteps,
                                            std::uint64_t cap = default_cap_per_timestep,
                                            const CheckpointObserver& observe = {}) {
  if (timesteps < 1) throw std::invalid_argument("verify: need at least one timestep");
  if (cap == 0) throw std::invalid_argument("verify: cap must be positive");

  const StepPredicate at_checkpoint = checkpoint_predicate(m);
  TmConfiguration config = initial_configuration(m);
  Rule110Config oracle = ether_config(0);
  std::vector<CheckpointReport> reports;
  reports.reserve(static_cast<std::size_t>(timesteps));

  for (int k = 1; k <= timesteps; ++k) {
    RunUntilResult r = run_until(m.table, std::move(config), at_checkpoint, cap);
    config = std::move(r.config);
    oracle = step(oracle);

    const BoldWindow bw = bold_window(m.id, k);
    CheckpointReport rep;
    rep.machine = m.id;
    rep.timestep = k;
    rep.cumulative_steps = config.steps_taken;
    rep.window = bw.cells;
    rep.extrapolated_window = bw.extrapolated;
    rep.decoded = decode_window(m, config.tape, tape_span(m, bw.cells), Side::left);
    rep.oracle = oracle.cells(bw.cells);
    for (std::size_t i = 0; i < rep.decoded.size(); ++i) {
      if (rep.decoded[i] != rep.oracle[i]) {
        rep.first_mismatch = bw.cells.first + static_cast<Index>(i);
        break;
      }
    }
    if (observe) observe(Checkpoint{k, config, r.event, oracle});
    reports.push_back(std::move(rep));
  }
  return reports;
}

inline std::vector<CheckpointReport> verify(MachineId id, int timesteps,
                                            std::uint64_t cap = default_cap_per_timestep) {
  return verify(machine_spec(id), timesteps, cap);
}

inline bool all_match(const std::vector<CheckpointReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.match(); });
}

// ---------------------------------------------------------------------------
// Step-count profile

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
  friend bool operator==(const LinearFit&, const LinearFit&) = default;
};

/// Ordinary least squares y ~ slope * x + intercept. A constant `y` gives
/// r_squared = 1 when it is fitted exactly.
inline LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need >= 2 paired points");
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_line: x values are all equal");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += e * e;
  }
  f.r_squared = syy == 0 ? (ss_res == 0 ? 1.0 : 0.0) : 1.0 - ss_res / syy;
  return f;
}

struct ProfileReport {
  MachineId machine = MachineId::u33;
  std::vector<std::uint64_t> per_timestep;  // index k-1 holds the cost of c_{k-1} -> c_k
  std::vector<std::uint64_t> cumulative;
  /// Per-timestep cost against k, k = 1..K. A quadratic total shows up as a
  /// good straight-line fit here.
  LinearFit fit;
  friend bool operator==(const ProfileReport&, const ProfileReport&) = default;
};

inline ProfileReport profile(const MachineSpec& m, int timesteps, std::uint64_t cap = default_cap_per_timestep) {
  if (timesteps < 2) throw std::invalid_argument("profile: need at least two timesteps");
  const StepPredicate at_checkpoint = checkpoint_predicate(m);
  TmConfiguration config = initial_configuration(m);
  ProfileReport rep;
  rep.machine = m.id;
  std::vector<double> xs, ys;
  for (int k = 1; k <= timesteps; ++k) {
    RunUntilResult r = run_until(m.table, std::move(config), at_checkpoint, cap);
    config = std::move(r.config);
    rep.per_timestep.push_back(r.steps);
    rep.cumulative.push_back(config.steps_taken);
    xs.push_back(k);
    ys.push_back(static_cast<double>(r.steps));
  }
  rep.fit = fit_line(xs, ys);
  return rep;
}

inline ProfileReport profile(MachineId id, int timesteps, std::uint64_t cap = default_cap_per_timestep) {
  return profile(machine_spec(id), timesteps, cap);
}

// ---------------------------------------------------------------------------
// Traces

struct TraceRecord {
  std::uint64_t step = 0;
  State state;
  Index head = 0;
  Index from = 0;  // tape index of window[0]
  std::vector<Symbol> window;
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Trace {
  MachineId machine = MachineId::u33;
  std::vector<TraceRecord> steps;
  friend bool operator==(const Trace&, const Trace&) = default;
};

inline TraceRecord snapshot(const TmConfiguration& c, const CellRange& window) {
  return {c.steps_taken, c.state, c.head, window.first, c.tape.read(window)};
}

/// Records configurations 0..steps with a window of `radius` cells either side
/// of the head.
inline Trace trace(const MachineSpec& m, std::uint64_t steps, Index radius = 12) {
  Trace t{m.id, {}};
  TmConfiguration c = initial_configuration(m);
  t.steps.push_back(snapshot(c, {c.head - radius, c.head + radius}));
  for (std::uint64_t i = 0; i < steps; ++i) {
    step(m.table, c);
    t.steps.push_back(snapshot(c, {c.head - radius, c.head + radius}));
  }
  return t;
}

struct GoldenDivergence {
  std::uint64_t step = 0;
  std::string field;  // "state", "head" or "tape"
  std::string expected;
  std::string actual;
};

struct GoldenCheck {
  MachineId machine = MachineId::u33;
  std::size_t frames_checked = 0;
  std::optional<GoldenDivergence> divergence;
  [[nodiscard]] bool passed() const { return !divergence; }
};

/// Replays `m` from its initial configuration and compares every frame of
/// `g`. Stops at the first divergence.
inline GoldenCheck golden_trace_check(const MachineSpec& m, const GoldenTrace& g) {
  GoldenCheck out{m.id, 0, {}};
  TmConfiguration c = initial_configuration(m);
  for (const GoldenFrame& f : g.frames) {
    while (c.steps_taken < f.step) step(m.table, c);
    const std::vector<Symbol> expected = m.word(f.glyphs);
    const CellRange window{g.from, g.from + static_cast<Index>(expected.size()) - 1};
    if (c.state.id != f.state) {
      out.divergence = GoldenDivergence{f.step, "state", "u" + std::to_string(f.state), "u" + std::to_string(c.state.id)};
    } else if (c.head != f.head) {
      out.divergence = GoldenDivergence{f.step, "head", std::to_string(f.head), std::to_string(c.head)};
    } else if (auto actual = c.tape.read(window); actual != expected) {
      out.divergence = GoldenDivergence{f.step, "tape", std::string(f.glyphs), m.plain(actual)};
    }
    if (out.divergence) return out;
    ++out.frames_checked;
  }
  return out;
}

inline GoldenCheck golden_trace_check(MachineId id) { return golden_trace_check(machine_spec(id), golden_trace(id)); }

}  // namespace weakutm
