#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orange/core_model.hpp"
#include "orange/piecewise.hpp"
#include "orange/telemetry_sample.hpp"

namespace orange {

// Deterministic move/pause alternation realizing a duty cycle of
// move_s / (move_s + pause_s). pause_s == 0 means continuous motion.
struct DutyPattern {
  double move_s = 1.0;
  double pause_s = 0.0;

  double duty() const { return move_s / (move_s + pause_s); }
};

// Everything one forward run needs. Profiles that are absent fall back to the
// constant conditions implied by the robot parameters (flat grade, the
// robot's rolling-resistance coefficient, zero disturbance).
struct Scenario {
  RobotParams robot;
  BatteryModel battery;
  AncillaryPowerModel ancillary;

  std::optional<PiecewiseLinear> grade_profile;        // x (m) -> theta (rad)
  std::optional<PiecewiseLinear> friction_profile;     // x (m) -> c_rr
  std::optional<PiecewiseLinear> disturbance_profile;  // t (s) -> force (N)

  double velocity_mps = 1.0;
  DutyPattern duty;
  double dt_s = 0.01;
  double sample_period_s = 0.1;
  std::uint64_t seed = 0;

  // Safety valve: a run that has not drained the battery by this simulated
  // time is reported as non-terminating.
  double max_sim_time_s = 1e5;
};

void validate(const Scenario& s);

struct SimResult {
  double true_range_m = 0.0;
  std::vector<TelemetrySample> telemetry;
  EnergyBreakdown energy;  // ancillary and traversal totals; sums to the spent energy
};

// Fixed-step forward integration until the effective battery energy is spent.
// While moving, power = ancillary + traction(x, v, t) * v / omega_man;
// while paused, ancillary only. Steps are split at phase boundaries, at
// telemetry emission times, and at the exhaustion instant, so the reported
// range and the energy totals are exact up to rounding. Telemetry is emitted
// every sample_period_s, plus a pre/post pair at every move/pause transition
// so the stream integrates back to the spent energy.
SimResult run(const Scenario& s);

// Returns a copy whose telemetry power readings are scaled by (1 + eps) with
// eps drawn uniformly from [-power_noise_rel, power_noise_rel), deterministic
// for a given seed. Distances and timestamps are untouched.
SimResult add_noise(const SimResult& result, double power_noise_rel, std::uint64_t seed);

}  // namespace orange
