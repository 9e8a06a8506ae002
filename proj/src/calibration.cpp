#include "orange/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <set>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "orange/errors.hpp"
#include "orange/io_util.hpp"

namespace orange {

namespace {

constexpr double kVelocityMatchTol = 1e-9;

std::size_t distinct_count(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values.size();
}

double population_std(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(xs.size()));
}

}  // namespace

AncillaryFit fit_ancillary(std::span<const PowerSample> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("fit_ancillary needs at least two samples");
  std::vector<double> freqs;
  for (const auto& s : samples) {
    if (!(s.f_s_hz >= 0.0) || !std::isfinite(s.f_s_hz))
      throw std::invalid_argument("power sample frequency must be finite and >= 0");
    if (!(s.power_w >= 0.0) || !std::isfinite(s.power_w))
      throw std::invalid_argument("power sample power must be finite and >= 0");
    freqs.push_back(s.f_s_hz);
  }
  if (distinct_count(freqs) < 2)
    throw UnderdeterminedError(
        "fit_ancillary underdetermined: all samples share one frequency, the slope s1 "
        "cannot be identified");

  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = samples[static_cast<std::size_t>(i)].f_s_hz;
    rhs(i) = samples[static_cast<std::size_t>(i)].power_w;
  }
  Eigen::Vector2d coeff = design.colPivHouseholderQr().solve(rhs);
  const double rms = std::sqrt((design * coeff - rhs).squaredNorm() / static_cast<double>(n));
  return AncillaryFit{coeff(0), coeff(1), rms};
}

BatteryDecayFit fit_battery_decay(std::span<const DecayObservation> observations,
                                  double rated_energy_j) {
  if (!(rated_energy_j > 0.0) || !std::isfinite(rated_energy_j))
    throw std::invalid_argument("rated_energy_j must be finite and > 0");
  if (observations.size() < 3)
    throw std::invalid_argument("fit_battery_decay needs at least three observations");

  std::vector<double> cycles, ages;
  for (const auto& o : observations) {
    if (!(o.cycles >= 0.0) || !(o.age_days >= 0.0))
      throw std::invalid_argument("decay observation has negative cycles or age");
    if (!(o.measured_energy_j > 0.0) || o.measured_energy_j > rated_energy_j ||
        !std::isfinite(o.measured_energy_j))
      throw std::invalid_argument(
          "measured energy must lie in (0, rated_energy_j]");
    cycles.push_back(o.cycles);
    ages.push_back(o.age_days);
  }
  if (distinct_count(cycles) < 2)
    throw UnderdeterminedError(
        "fit_battery_decay underdetermined: k1 cannot be identified, all observations "
        "share one cycle count");
  if (distinct_count(ages) < 2)
    throw UnderdeterminedError(
        "fit_battery_decay underdetermined: k2 cannot be identified, all observations "
        "share one age");

  const auto n = static_cast<Eigen::Index>(observations.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& o = observations[static_cast<std::size_t>(i)];
    design(i, 0) = o.cycles;
    design(i, 1) = o.age_days;
    rhs(i) = std::log(rated_energy_j / o.measured_energy_j);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(1) <= 1e-12 * sv(0))
    throw UnderdeterminedError(
        "fit_battery_decay underdetermined: cycle and age columns are collinear");

  Eigen::Vector2d coeff = svd.solve(rhs);
  const double rms = std::sqrt((design * coeff - rhs).squaredNorm() / static_cast<double>(n));
  return BatteryDecayFit{coeff(0), coeff(1), rms};
}

ManeuveringFit fit_maneuvering_efficiency(std::span<const WheelsUpRun> wheels_up,
                                          std::span<const LoadedRun> loaded,
                                          double ancillary_w) {
  if (!(ancillary_w >= 0.0) || !std::isfinite(ancillary_w))
    throw std::invalid_argument("ancillary_w must be finite and >= 0");
  if (loaded.empty() || wheels_up.empty())
    throw std::invalid_argument("fit_maneuvering_efficiency needs wheels-up and loaded runs");

  std::vector<double> estimates;
  for (const auto& run : loaded) {
    if (!(run.commanded_v_mps > 0.0))
      throw std::invalid_argument("loaded run velocity must be > 0");
    if (!(run.mean_power_w > 0.0))
      throw std::invalid_argument("loaded run power must be > 0");
    if (!(run.mean_traction_n > 0.0))
      throw std::invalid_argument("loaded run traction must be > 0");

    const WheelsUpRun* mate = nullptr;
    for (const auto& w : wheels_up) {
      if (std::abs(w.commanded_v_mps - run.commanded_v_mps) <=
          kVelocityMatchTol * std::max(1.0, std::abs(run.commanded_v_mps))) {
        mate = &w;
        break;
      }
    }
    if (!mate)
      throw std::invalid_argument("no wheels-up run paired with velocity " +
                                  fmt_double(run.commanded_v_mps));
    if (!(mate->mean_power_w >= 0.0))
      throw std::invalid_argument("wheels-up power must be >= 0");
    if (run.mean_power_w <= mate->mean_power_w)
      throw InconsistentDataError(
          "loaded power does not exceed wheels-up power at velocity " +
          fmt_double(run.commanded_v_mps));

    const double drive_power = run.mean_power_w - ancillary_w;
    if (!(drive_power > 0.0))
      throw InconsistentDataError(
          "loaded power does not exceed ancillary power at velocity " +
          fmt_double(run.commanded_v_mps));

    estimates.push_back(run.mean_traction_n * run.commanded_v_mps / drive_power);
  }

  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= static_cast<double>(estimates.size());
  return ManeuveringFit{mean, population_std(estimates, mean)};
}

namespace {

// Generic fixed-header CSV reader for the small calibration logs. These are
// curated inputs, so any malformed row is an error rather than a warning.
std::vector<std::vector<double>> read_numeric_csv(std::istream& in, const std::string& header) {
  std::string line;
  if (!std::getline(in, line))
    throw ConfigError("calibration log is empty, expected header '" + header + "'");
  if (std::string(strip_cr(line)) != header)
    throw ConfigError("calibration log has header '" + std::string(strip_cr(line)) +
                      "', expected '" + header + "'");
  const std::size_t ncols = split_fields(header).size();

  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = strip_cr(line);
    if (sv.empty()) continue;
    auto fields = split_fields(sv);
    if (fields.size() != ncols)
      throw ConfigError("calibration log line " + std::to_string(lineno) +
                        ": expected " + std::to_string(ncols) + " fields");
    std::vector<double> row(ncols);
    for (std::size_t c = 0; c < ncols; ++c)
      if (!try_parse_double(fields[c], row[c]))
        throw ConfigError("calibration log line " + std::to_string(lineno) +
                          ": field '" + std::string(fields[c]) + "' is not a number");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<PowerSample> read_power_samples_csv(std::istream& in) {
  std::vector<PowerSample> out;
  for (const auto& r : read_numeric_csv(in, "f_s_hz,power_w")) out.push_back({r[0], r[1]});
  return out;
}

std::vector<DecayObservation> read_decay_csv(std::istream& in) {
  std::vector<DecayObservation> out;
  for (const auto& r : read_numeric_csv(in, "cycles,age_days,measured_energy_j"))
    out.push_back({r[0], r[1], r[2]});
  return out;
}

std::vector<WheelsUpRun> read_wheels_up_csv(std::istream& in) {
  std::vector<WheelsUpRun> out;
  for (const auto& r : read_numeric_csv(in, "commanded_v_mps,mean_power_w"))
    out.push_back({r[0], r[1]});
  return out;
}

std::vector<LoadedRun> read_loaded_csv(std::istream& in) {
  std::vector<LoadedRun> out;
  for (const auto& r : read_numeric_csv(in, "commanded_v_mps,mean_power_w,mean_traction_n"))
    out.push_back({r[0], r[1], r[2]});
  return out;
}

}  // namespace orange
