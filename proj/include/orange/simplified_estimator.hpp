#pragma once

#include <optional>

#include "orange/core_model.hpp"
#include "orange/range_result.hpp"

namespace orange {

// Mission description for the closed-form indoor model: steady cruise on a
// plane of constant grade, with pauses folded into a duty cycle.
struct SimplifiedMission {
  double grade_theta_rad = 0.0;  // surface elevation angle, |theta| < pi/2
  double velocity_mps = 0.0;     // commanded cruise velocity
  double v_opt_mps = 0.0;        // operational velocity used for the max-range point
  double duty_cycle = 1.0;       // fraction of mission time spent moving, in (0, 1]
  std::optional<double> distance_m;  // optional displacement for energy queries
};

void validate(const SimplifiedMission& m);

// Resistive force at grade theta and speed v:
// rolling resistance on the normal load, aerial drag, and the weight
// component along the slope. Negative on a steep enough downhill.
double traction_force_at(const RobotParams& r, double theta_rad, double v_mps);

// Same, evaluated at the mission's commanded velocity.
double traction_force(const RobotParams& r, const SimplifiedMission& m);

// Mechanical work against the resistive force over a displacement d >= 0.
double maneuvering_energy(const RobotParams& r, const SimplifiedMission& m, double distance_m);

// Battery energy needed to cover distance_m: ancillary draw over the mission
// wall-clock time plus maneuvering energy inflated by the drivetrain
// efficiency. The two parts of the breakdown re-sum exactly to the total.
EnergyBreakdown energy_split_for_distance(const RobotParams& r, const BatteryModel& b,
                                          const AncillaryPowerModel& a,
                                          const SimplifiedMission& m, double distance_m);

double total_energy_for_distance(const RobotParams& r, const BatteryModel& b,
                                 const AncillaryPowerModel& a, const SimplifiedMission& m,
                                 double distance_m);

// Distance at which the effective battery energy is exactly spent, evaluated
// at the mission's operational velocity. Unbounded when nothing drains the
// battery per meter of progress.
RangeEstimate max_range(const RobotParams& r, const BatteryModel& b,
                        const AncillaryPowerModel& a, const SimplifiedMission& m);

}  // namespace orange
