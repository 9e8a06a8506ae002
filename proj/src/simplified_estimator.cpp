#include "orange/simplified_estimator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orange {

void validate(const SimplifiedMission& m) {
  if (!std::isfinite(m.grade_theta_rad) || std::abs(m.grade_theta_rad) >= std::numbers::pi / 2)
    throw std::invalid_argument("grade_theta_rad must satisfy |theta| < pi/2");
  if (!(m.velocity_mps > 0.0) || !std::isfinite(m.velocity_mps))
    throw std::invalid_argument("velocity_mps must be finite and > 0");
  if (!(m.v_opt_mps > 0.0) || !std::isfinite(m.v_opt_mps))
    throw std::invalid_argument("v_opt_mps must be finite and > 0");
  if (!(m.duty_cycle > 0.0) || !(m.duty_cycle <= 1.0))
    throw std::invalid_argument("duty_cycle must lie in (0, 1]");
  if (m.distance_m && (!(*m.distance_m >= 0.0) || !std::isfinite(*m.distance_m)))
    throw std::invalid_argument("distance_m must be finite and >= 0");
}

double traction_force_at(const RobotParams& r, double theta_rad, double v_mps) {
  const double weight = r.mass_kg * r.gravity_mps2;
  const double grade_part = r.c_rr * weight * std::cos(theta_rad) + weight * std::sin(theta_rad);
  return grade_part + r.drag_coeff * v_mps * v_mps;
}

double traction_force(const RobotParams& r, const SimplifiedMission& m) {
  validate(r);
  validate(m);
  return traction_force_at(r, m.grade_theta_rad, m.velocity_mps);
}

double maneuvering_energy(const RobotParams& r, const SimplifiedMission& m, double distance_m) {
  if (!(distance_m >= 0.0) || !std::isfinite(distance_m))
    throw std::invalid_argument("distance_m must be finite and >= 0");
  return traction_force(r, m) * distance_m;
}

EnergyBreakdown energy_split_for_distance(const RobotParams& r, const BatteryModel& b,
                                          const AncillaryPowerModel& a,
                                          const SimplifiedMission& m, double distance_m) {
  validate(b);
  if (!(distance_m >= 0.0) || !std::isfinite(distance_m))
    throw std::invalid_argument("distance_m must be finite and >= 0");
  const double v_duty = m.velocity_mps * m.duty_cycle;
  const double p_anc = ancillary_power(a);
  const double omega = maneuvering_efficiency(r.losses);

  EnergyBreakdown split;
  split.ancillary_j = p_anc * distance_m / v_duty;  // wall-clock time = d / (v * D)
  split.traversal_j = maneuvering_energy(r, m, distance_m) / omega;
  return split;
}

double total_energy_for_distance(const RobotParams& r, const BatteryModel& b,
                                 const AncillaryPowerModel& a, const SimplifiedMission& m,
                                 double distance_m) {
  return energy_split_for_distance(r, b, a, m, distance_m).total_j();
}

RangeEstimate max_range(const RobotParams& r, const BatteryModel& b,
                        const AncillaryPowerModel& a, const SimplifiedMission& m) {
  validate(m);
  const double e_hat = effective_energy(b);
  const double p_anc = ancillary_power(a);
  const double omega = maneuvering_efficiency(r.losses);

  // Per-meter consumption at the operational velocity.
  const double per_meter = p_anc / (m.v_opt_mps * m.duty_cycle) +
                           traction_force_at(r, m.grade_theta_rad, m.v_opt_mps) / omega;
  if (!(per_meter > 0.0)) return RangeEstimate::unbounded();
  return RangeEstimate::bounded(e_hat / per_meter);
}

}  // namespace orange
