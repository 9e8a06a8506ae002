#include "orange/generalized_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "orange/errors.hpp"
#include "orange/simplified_estimator.hpp"

namespace orange {

void validate(const ForceProfile& p) {
  if (!(p.f_const_n >= 0.0) || !std::isfinite(p.f_const_n))
    throw std::invalid_argument("f_const_n must be finite and >= 0");
  if (!(p.drag_coeff >= 0.0) || !std::isfinite(p.drag_coeff))
    throw std::invalid_argument("drag_coeff must be finite and >= 0");
  // Sampled components are validated at construction (strictly increasing
  // grids, no NaN samples).
}

ForceProfile simplified_force_profile(const RobotParams& r, double grade_theta_rad) {
  validate(r);
  ForceProfile p;
  const double weight = r.mass_kg * r.gravity_mps2;
  p.f_const_n = r.c_rr * weight * std::cos(grade_theta_rad) + weight * std::sin(grade_theta_rad);
  p.drag_coeff = r.drag_coeff;
  return p;
}

namespace {

void check_speed_duty(double v_mps, double duty) {
  if (!(v_mps > 0.0) || !std::isfinite(v_mps))
    throw std::invalid_argument("velocity must be finite and > 0");
  if (!(duty > 0.0) || !(duty <= 1.0)) throw std::invalid_argument("duty must lie in (0, 1]");
}

// Distance beyond which some sampled component has no more data. Time grids
// are mapped to position through x = t * v * duty.
double profile_domain_limit(const ForceProfile& p, double v_mps, double duty) {
  double limit = std::numeric_limits<double>::infinity();
  if (p.f_position) limit = std::min(limit, p.f_position->back_x());
  if (p.f_time) limit = std::min(limit, p.f_time->back_x() * v_mps * duty);
  return limit;
}

}  // namespace

double profile_path_integral(const ForceProfile& p, double distance_m, double v_mps,
                             double duty) {
  validate(p);
  check_speed_duty(v_mps, duty);
  if (!(distance_m >= 0.0) || !std::isfinite(distance_m))
    throw std::invalid_argument("distance_m must be finite and >= 0");
  if (distance_m == 0.0 || (!p.f_position && !p.f_time)) return 0.0;

  const double v_duty = v_mps * duty;

  // Breakpoints of the integrand in position space: the position grid plus
  // the time grid mapped through x = t * v * duty.
  std::vector<double> breaks;
  if (p.f_position)
    breaks.insert(breaks.end(), p.f_position->xs().begin(), p.f_position->xs().end());
  if (p.f_time)
    for (double t : p.f_time->xs()) breaks.push_back(t * v_duty);

  auto integrand = [&](double x) {
    double f = 0.0;
    if (p.f_position) f += p.f_position->value_at(x);
    if (p.f_time) f += p.f_time->value_at(x / v_duty);
    return f;
  };
  return trapezoid_integrate(integrand, 0.0, distance_m, breaks);
}

double traversal_energy(const ForceProfile& p, double path_length_m, double v_mps, double duty,
                        double omega_man) {
  if (!(omega_man > 0.0) || !(omega_man <= 1.0))
    throw std::invalid_argument("omega_man must lie in (0, 1]");
  if (!(path_length_m >= 0.0) || !std::isfinite(path_length_m))
    throw std::invalid_argument("path_length_m must be finite and >= 0");
  validate(p);
  check_speed_duty(v_mps, duty);

  const double steady = (p.f_const_n + p.drag_coeff * v_mps * v_mps) * path_length_m;
  return (steady + profile_path_integral(p, path_length_m, v_mps, duty)) / omega_man;
}

RangeEstimate estimate_range_offline(const RobotParams& r, const BatteryModel& b,
                                     const AncillaryPowerModel& a, const ForceProfile& p,
                                     const OfflineApproximation& approx, double v_mps,
                                     double duty) {
  validate(p);
  check_speed_duty(v_mps, duty);
  if (!std::isfinite(approx.mean_specific_force_n))
    throw std::invalid_argument("mean_specific_force_n must be finite");

  const double e_hat = effective_energy(b);
  const double p_anc = ancillary_power(a);
  const double omega = maneuvering_efficiency(r.losses);

  const double per_meter = p_anc / (v_mps * duty) +
                           (p.f_const_n + p.drag_coeff * v_mps * v_mps) / omega +
                           approx.mean_specific_force_n / omega;
  if (!(per_meter > 0.0)) return RangeEstimate::unbounded();
  return RangeEstimate::bounded(e_hat / per_meter);
}

RangeEstimate solve_range_implicit(const RobotParams& r, const BatteryModel& b,
                                   const AncillaryPowerModel& a, const ForceProfile& p,
                                   double v_mps, double duty) {
  validate(p);
  check_speed_duty(v_mps, duty);

  const double e_hat = effective_energy(b);
  const double p_anc = ancillary_power(a);
  const double omega = maneuvering_efficiency(r.losses);
  const double base_per_meter =
      p_anc / (v_mps * duty) + (p.f_const_n + p.drag_coeff * v_mps * v_mps) / omega;

  auto energy_at = [&](double d) {
    return base_per_meter * d + profile_path_integral(p, d, v_mps, duty) / omega;
  };

  const double limit = profile_domain_limit(p, v_mps, duty);

  if (!std::isfinite(limit)) {
    // No sampled parts: the energy balance is linear in d.
    if (!(base_per_meter > 0.0)) return RangeEstimate::unbounded();
    return RangeEstimate::bounded(e_hat / base_per_meter);
  }

  const double tol = 1e-6 * e_hat;
  if (energy_at(limit) < e_hat - tol) return RangeEstimate::unbounded_within_profile(limit);

  // Cumulative energy is monotone for resistive profiles, so bisection on
  // [0, limit] converges to the unique crossing.
  double lo = 0.0, hi = limit;
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double e_mid = energy_at(mid);
    if (std::abs(e_mid - e_hat) <= tol) return RangeEstimate::bounded(mid);
    if (e_mid < e_hat)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
  }
  return RangeEstimate::bounded(mid);
}

OnlineEstimatorState online_update(const OnlineEstimatorState& s, const TelemetrySample& sample,
                                   const BatteryModel& b) {
  if (!std::isfinite(sample.t_s) || !std::isfinite(sample.x_m) || !std::isfinite(sample.power_w))
    throw std::invalid_argument("telemetry sample rejected: non-finite field");
  if (sample.power_w < 0.0)
    throw std::invalid_argument("telemetry sample rejected: negative power");

  OnlineEstimatorState n = s;

  if (!n.has_baseline) {
    n.has_baseline = true;
    n.last_t_s = sample.t_s;
    n.last_x_m = sample.x_m;
    n.last_power_w = sample.power_w;
    return n;
  }

  if (sample.t_s < s.last_t_s || sample.x_m < s.last_x_m)
    throw std::invalid_argument("telemetry sample rejected: out of order");

  const double dt = sample.t_s - s.last_t_s;
  const double dx = sample.x_m - s.last_x_m;
  const double de = 0.5 * (s.last_power_w + sample.power_w) * dt;

  n.distance_so_far_m += dx;
  n.energy_used_j += de;
  n.window.push_back({dx, de});
  n.window_dx_m += dx;
  n.window_de_j += de;

  const double target = n.window_m > 0.0
                            ? n.window_m
                            : std::max(0.2 * n.distance_so_far_m, 5.0);
  while (n.window.size() > 1 && n.window_dx_m - n.window.front().dx_m >= target) {
    n.window_dx_m -= n.window.front().dx_m;
    n.window_de_j -= n.window.front().de_j;
    n.window.pop_front();
  }

  n.last_t_s = sample.t_s;
  n.last_x_m = sample.x_m;
  n.last_power_w = sample.power_w;

  if (auto s_hat = n.window_specific_j_per_m(); s_hat && *s_hat > 0.0) {
    const double remaining = effective_energy(b) - n.energy_used_j;
    n.current_estimate_m = n.distance_so_far_m + remaining / *s_hat;
  }
  return n;
}

}  // namespace orange
