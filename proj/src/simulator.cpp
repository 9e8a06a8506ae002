#include "orange/simulator.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "orange/errors.hpp"
#include "orange/io_util.hpp"

namespace orange {

void validate(const Scenario& s) {
  validate(s.robot);
  validate(s.battery);
  validate(s.ancillary);
  if (!(s.velocity_mps > 0.0) || !std::isfinite(s.velocity_mps))
    throw std::invalid_argument("velocity_mps must be finite and > 0");
  if (!(s.duty.move_s > 0.0) || !std::isfinite(s.duty.move_s))
    throw std::invalid_argument("duty_pattern move_s must be finite and > 0");
  if (!(s.duty.pause_s >= 0.0) || !std::isfinite(s.duty.pause_s))
    throw std::invalid_argument("duty_pattern pause_s must be finite and >= 0");
  if (!(s.dt_s > 0.0) || !std::isfinite(s.dt_s))
    throw std::invalid_argument("dt_s must be finite and > 0");
  if (!(s.sample_period_s > 0.0) || !std::isfinite(s.sample_period_s))
    throw std::invalid_argument("sample_period_s must be finite and > 0");
  if (!(s.max_sim_time_s > 0.0))
    throw std::invalid_argument("max_sim_time_s must be > 0");
}

namespace {

// Largest value the resistive force can take anywhere on the scenario. The
// grade and drag terms are bounded independently of position/time, and a
// piecewise-linear profile attains its maximum at a grid node, so this bound
// is tight enough to prove non-termination.
double max_resistive_force(const Scenario& s) {
  const double weight = s.robot.mass_kg * s.robot.gravity_mps2;
  const double max_crr =
      s.friction_profile ? std::max(s.friction_profile->max_value(), 0.0) : s.robot.c_rr;
  double max_sin = 0.0;
  if (s.grade_profile) {
    max_sin = -1.0;
    for (double theta : s.grade_profile->ys()) max_sin = std::max(max_sin, std::sin(theta));
  }
  const double drag = s.robot.drag_coeff * s.velocity_mps * s.velocity_mps;
  const double max_dist = s.disturbance_profile ? s.disturbance_profile->max_value() : 0.0;
  return max_crr * weight + weight * max_sin + drag + max_dist;
}

}  // namespace

SimResult run(const Scenario& s) {
  validate(s);

  const double e_hat = effective_energy(s.battery);
  const double p_anc = ancillary_power(s.ancillary);
  const double omega = maneuvering_efficiency(s.robot.losses);
  const double v = s.velocity_mps;
  const double weight = s.robot.mass_kg * s.robot.gravity_mps2;
  const bool has_pause = s.duty.pause_s > 0.0;

  if (p_anc <= 0.0 && max_resistive_force(s) <= 0.0)
    throw NonTerminatingError(
        "scenario drains no energy: resistive force <= 0 everywhere and no ancillary draw");

  auto traction_at = [&](double x, double t) {
    const double theta = s.grade_profile ? s.grade_profile->value_at(x) : 0.0;
    const double c_rr = s.friction_profile ? s.friction_profile->value_at(x) : s.robot.c_rr;
    const double dist = s.disturbance_profile ? s.disturbance_profile->value_at(t) : 0.0;
    return c_rr * weight * std::cos(theta) + weight * std::sin(theta) +
           s.robot.drag_coeff * v * v + dist;
  };

  SimResult result;
  double t = 0.0, x = 0.0;
  double ae = 0.0, te = 0.0;
  bool moving = true;
  double phase_end = s.duty.move_s;  // irrelevant when has_pause is false
  double next_emit = s.sample_period_s;

  auto motion_power = [&]() { return moving ? traction_at(x, t) * v / omega : 0.0; };
  auto emit = [&](double p_total) {
    result.telemetry.push_back({t, x, moving ? v : 0.0, p_total, moving});
  };

  emit(p_anc + motion_power());

  if (e_hat <= 0.0) {
    result.true_range_m = 0.0;
    return result;
  }

  while (ae + te < e_hat) {
    if (t >= s.max_sim_time_s)
      throw NonTerminatingError("energy not exhausted within max_sim_time_s = " +
                                fmt_double(s.max_sim_time_s));

    const double p_mot = motion_power();
    const double p_total = p_anc + p_mot;

    double tau = std::min(s.dt_s, next_emit - t);
    if (has_pause) tau = std::min(tau, phase_end - t);
    if (!(tau > 0.0)) throw std::logic_error("simulator step collapsed to zero");

    const double remaining = e_hat - (ae + te);
    if (p_total > 0.0 && p_total * tau >= remaining) {
      const double t_final = remaining / p_total;
      t += t_final;
      if (moving) x += v * t_final;
      ae += p_anc * t_final;
      te += p_mot * t_final;
      emit(p_total);
      break;
    }

    t += tau;
    if (moving) x += v * tau;
    ae += p_anc * tau;
    te += p_mot * tau;

    const bool at_phase_end = has_pause && t >= phase_end - 1e-12;
    const bool at_emit = t >= next_emit - 1e-12;

    if (at_emit || at_phase_end) {
      // Instantaneous state at the new (t, x), still in the current phase.
      emit(p_anc + motion_power());
      while (next_emit <= t + 1e-12) next_emit += s.sample_period_s;
    }
    if (at_phase_end) {
      moving = !moving;
      phase_end += moving ? s.duty.move_s : s.duty.pause_s;
      // Post-transition twin so the stream integrates exactly across the
      // power step.
      emit(p_anc + motion_power());
    }
  }

  result.true_range_m = x;
  result.energy = {ae, te};
  return result;
}

SimResult add_noise(const SimResult& result, double power_noise_rel, std::uint64_t seed) {
  if (!(power_noise_rel >= 0.0) || !(power_noise_rel <= 0.5))
    throw std::invalid_argument("power_noise_rel must lie in [0, 0.5]");

  SimResult noisy = result;
  if (power_noise_rel == 0.0) return noisy;

  // splitmix64: tiny, seed-deterministic, identical across platforms.
  std::uint64_t state = seed;
  auto next_u64 = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };

  for (auto& sample : noisy.telemetry) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;  // [0, 1)
    const double eps = (2.0 * u - 1.0) * power_noise_rel;
    sample.power_w *= 1.0 + eps;
  }
  return noisy;
}

}  // namespace orange
