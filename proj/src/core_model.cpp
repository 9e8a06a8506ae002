#include "orange/core_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace orange {

namespace {

void check_fraction(double eta, const char* name) {
  if (!(eta >= 0.0) || !(eta < 1.0) || !std::isfinite(eta))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1)");
}

void check_nonneg(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
}

}  // namespace

void validate(const LossFractions& l) {
  check_fraction(l.eta1_battery, "eta1_battery");
  check_fraction(l.eta2_drive_motor, "eta2_drive_motor");
  check_fraction(l.eta3_mechanical, "eta3_mechanical");
  check_fraction(l.eta4_ancillary, "eta4_ancillary");
}

double maneuvering_efficiency(const LossFractions& l) {
  validate(l);
  return (1.0 - l.eta2_drive_motor) * (1.0 - l.eta3_mechanical);
}

double system_efficiency(const LossFractions& l) {
  validate(l);
  return (1.0 - l.eta1_battery) * (1.0 - l.eta2_drive_motor) * (1.0 - l.eta3_mechanical) *
         (1.0 - l.eta4_ancillary);
}

void validate(const RobotParams& r) {
  check_positive(r.mass_kg, "mass_kg");
  check_positive(r.gravity_mps2, "gravity_mps2");
  check_nonneg(r.c_rr, "c_rr");
  check_nonneg(r.drag_coeff, "drag_coeff");
  validate(r.losses);
}

void validate(const BatteryModel& b) {
  check_positive(b.rated_energy_j, "rated_energy_j");
  check_nonneg(b.k1, "k1");
  check_nonneg(b.k2, "k2");
  check_nonneg(b.cycles, "cycles");
  check_nonneg(b.age_days, "age_days");
}

double effective_energy(const BatteryModel& b) {
  validate(b);
  return b.rated_energy_j * std::exp(-(b.k1 * b.cycles + b.k2 * b.age_days));
}

void validate(const AncillaryPowerModel& a) {
  check_nonneg(a.s0_w, "s0_w");
  check_nonneg(a.s1_w_per_hz, "s1_w_per_hz");
  check_nonneg(a.f_s_hz, "f_s_hz");
  check_nonneg(a.p_comp_w, "p_comp_w");
  check_nonneg(a.p_comm_w, "p_comm_w");
}

double ancillary_power(const AncillaryPowerModel& a) {
  validate(a);
  return (a.s0_w + a.s1_w_per_hz * a.f_s_hz) + a.p_comp_w + a.p_comm_w;
}

}  // namespace orange
