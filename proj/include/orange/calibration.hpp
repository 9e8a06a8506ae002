#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace orange {

// One measurement of total electrical power at a given sensor frequency.
struct PowerSample {
  double f_s_hz = 0.0;
  double power_w = 0.0;
};

// One measurement of remaining pack energy at a given wear state.
struct DecayObservation {
  double cycles = 0.0;
  double age_days = 0.0;
  double measured_energy_j = 0.0;
};

// Bench run with the wheels off the ground: no useful work, so the measured
// power is ancillary draw plus internal drivetrain losses.
struct WheelsUpRun {
  double commanded_v_mps = 0.0;
  double mean_power_w = 0.0;
};

// Run under load with an independently known resistive force.
struct LoadedRun {
  double commanded_v_mps = 0.0;
  double mean_power_w = 0.0;
  double mean_traction_n = 0.0;
};

struct AncillaryFit {
  double s0_w = 0.0;
  double s1_w_per_hz = 0.0;
  double residual_rms_w = 0.0;
};

struct BatteryDecayFit {
  double k1 = 0.0;
  double k2 = 0.0;
  double residual_rms_log = 0.0;  // RMS residual of ln(rated/measured)
};

struct ManeuveringFit {
  double omega_man = 0.0;
  double residual_std = 0.0;  // spread of the per-velocity estimates
};

// Ordinary least squares of power on frequency. Needs at least two samples at
// two distinct frequencies; otherwise the line is underdetermined.
AncillaryFit fit_ancillary(std::span<const PowerSample> samples);

// Least squares of ln(rated/measured) on (cycles, age), through the origin.
// Needs observations spanning two distinct cycle counts and two distinct
// ages, and a design where the two columns are not collinear.
BatteryDecayFit fit_battery_decay(std::span<const DecayObservation> observations,
                                  double rated_energy_j);

// Per matched velocity: omega = traction * v / (loaded power - ancillary
// power), averaged across velocities. The wheels-up runs anchor the
// consistency check that loaded power exceeds the no-load power.
ManeuveringFit fit_maneuvering_efficiency(std::span<const WheelsUpRun> wheels_up,
                                          std::span<const LoadedRun> loaded,
                                          double ancillary_w);

// CSV readers for calibration logs. Headers are fixed:
//   power samples:  f_s_hz,power_w
//   decay log:      cycles,age_days,measured_energy_j
//   wheels-up log:  commanded_v_mps,mean_power_w
//   loaded log:     commanded_v_mps,mean_power_w,mean_traction_n
std::vector<PowerSample> read_power_samples_csv(std::istream& in);
std::vector<DecayObservation> read_decay_csv(std::istream& in);
std::vector<WheelsUpRun> read_wheels_up_csv(std::istream& in);
std::vector<LoadedRun> read_loaded_csv(std::istream& in);

}  // namespace orange
