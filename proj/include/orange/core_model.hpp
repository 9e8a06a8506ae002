#pragma once

namespace orange {

// Loss fractions for the four on-board energy sinks. Each eta is the fraction
// of throughput lost in that stage, in [0, 1).
struct LossFractions {
  double eta1_battery = 0.0;
  double eta2_drive_motor = 0.0;
  double eta3_mechanical = 0.0;
  double eta4_ancillary = 0.0;
};

void validate(const LossFractions& l);

// (1 - eta2) * (1 - eta3): fraction of drive electrical power that reaches the
// ground as mechanical work. Always in (0, 1].
double maneuvering_efficiency(const LossFractions& l);

// Product over all four stages, in (0, 1].
double system_efficiency(const LossFractions& l);

// Physical constants of one robot.
struct RobotParams {
  double mass_kg = 0.0;
  double c_rr = 0.0;        // rolling-resistance coefficient
  double drag_coeff = 0.0;  // aerial drag, force = drag_coeff * v^2  (kg/m)
  LossFractions losses;
  double gravity_mps2 = 9.81;
};

void validate(const RobotParams& r);

// Battery pack modelled as stored energy that decays exponentially with
// recharge cycles and calendar age.
struct BatteryModel {
  double rated_energy_j = 0.0;  // nameplate energy of a fresh pack
  double k1 = 0.0;              // per-cycle decay coefficient (1/cycle)
  double k2 = 0.0;              // aging decay coefficient (1/day)
  double cycles = 0.0;          // recharge cycles so far
  double age_days = 0.0;
};

void validate(const BatteryModel& b);

// rated * exp(-(k1*cycles + k2*age_days)). Never exceeds the rated energy.
double effective_energy(const BatteryModel& b);

// Non-locomotion draw: sensing scales linearly with sensor frequency, plus
// constant computation and communication terms.
struct AncillaryPowerModel {
  double s0_w = 0.0;         // sensing baseline
  double s1_w_per_hz = 0.0;  // sensing slope
  double f_s_hz = 0.0;       // sensor operating frequency
  double p_comp_w = 0.0;
  double p_comm_w = 0.0;
};

void validate(const AncillaryPowerModel& a);

double ancillary_power(const AncillaryPowerModel& a);

struct EnergyBreakdown {
  double ancillary_j = 0.0;
  double traversal_j = 0.0;
  double total_j() const { return ancillary_j + traversal_j; }
};

}  // namespace orange
