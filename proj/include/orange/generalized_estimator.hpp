#pragma once

#include <deque>
#include <optional>

#include "orange/core_model.hpp"
#include "orange/piecewise.hpp"
#include "orange/range_result.hpp"
#include "orange/telemetry_sample.hpp"

namespace orange {

// Decomposition of the net resistive force into a constant part, a velocity
// law, and sampled position- and time-dependent parts.
struct ForceProfile {
  double f_const_n = 0.0;
  double drag_coeff = 0.0;                    // force = drag_coeff * v^2
  std::optional<PiecewiseLinear> f_position;  // x (m) -> force (N)
  std::optional<PiecewiseLinear> f_time;      // t (s) -> force (N)
};

void validate(const ForceProfile& p);

// Maps the constant-grade model onto a ForceProfile: the gravity and rolling
// resistance terms become the constant force, the drag coefficient carries
// over, and the sampled parts stay empty.
ForceProfile simplified_force_profile(const RobotParams& r, double grade_theta_rad);

// Integral of f_position(x) + f_time(x / (v * duty)) over [0, distance_m].
// Elapsed time is mapped to position through the duty-discounted velocity.
// Exact for the piecewise-linear samples (trapezoid on the merged grids).
double profile_path_integral(const ForceProfile& p, double distance_m, double v_mps,
                             double duty);

// Electrical energy the drivetrain draws to cover path_length_m:
// mechanical work against all four force parts, inflated by omega_man.
double traversal_energy(const ForceProfile& p, double path_length_m, double v_mps,
                        double duty, double omega_man);

// One-shot supervisor guess of the average sampled force per meter over the
// planned path. Finite; zero when the path holds no position/time effects.
struct OfflineApproximation {
  double mean_specific_force_n = 0.0;
};

// A-priori range: effective energy over the per-meter consumption, with the
// sampled force parts replaced by the supervisor's mean.
RangeEstimate estimate_range_offline(const RobotParams& r, const BatteryModel& b,
                                     const AncillaryPowerModel& a, const ForceProfile& p,
                                     const OfflineApproximation& approx, double v_mps,
                                     double duty);

// Full implicit range: finds the distance whose cumulative energy expenditure
// (ancillary plus traversal) meets the effective battery energy, by bisection
// on the cumulative-energy function. The returned d satisfies
// |E(d) - E_hat| <= 1e-6 * E_hat. When the sampled force data ends before the
// energy does, the result is the unbounded-within-profile variant carrying
// the domain limit.
RangeEstimate solve_range_implicit(const RobotParams& r, const BatteryModel& b,
                                   const AncillaryPowerModel& a, const ForceProfile& p,
                                   double v_mps, double duty);

// Running state of the telemetry-driven estimator. It accumulates distance
// and energy, keeps a trailing window of increments, and extrapolates the
// remaining range from the windowed specific consumption (J/m).
struct OnlineEstimatorState {
  // Trailing window length in meters. 0 selects the adaptive default:
  // 20% of the distance travelled so far, floored at 5 m.
  double window_m = 0.0;

  double distance_so_far_m = 0.0;
  double energy_used_j = 0.0;
  std::optional<double> current_estimate_m;  // unset until motion is recorded

  struct Increment {
    double dx_m;
    double de_j;
  };
  std::deque<Increment> window;
  double window_dx_m = 0.0;
  double window_de_j = 0.0;

  // Baseline sample against which the next increment is formed.
  bool has_baseline = false;
  double last_t_s = 0.0;
  double last_x_m = 0.0;
  double last_power_w = 0.0;

  // Windowed specific consumption (J/m); unset before any motion.
  std::optional<double> window_specific_j_per_m() const {
    if (window_dx_m <= 0.0) return std::nullopt;
    return window_de_j / window_dx_m;
  }
};

// Folds one telemetry sample into the state and refreshes the estimate:
// total range = distance so far + remaining energy / windowed J per m.
// Rejects NaN, negative-power, and out-of-order samples with
// std::invalid_argument; the prior state stays valid so a stream can skip the
// bad row and continue.
OnlineEstimatorState online_update(const OnlineEstimatorState& s, const TelemetrySample& sample,
                                   const BatteryModel& b);

}  // namespace orange
