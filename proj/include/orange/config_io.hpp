#pragma once

#include <filesystem>

#include <json.hpp>

#include "orange/calibration.hpp"
#include "orange/core_model.hpp"
#include "orange/generalized_estimator.hpp"
#include "orange/simplified_estimator.hpp"
#include "orange/simulator.hpp"

namespace orange {

// Strict JSON parsers for the published document formats. Unknown keys,
// missing required keys, wrong types, and invariant violations all raise
// ConfigError. The shipped schemas/ directory documents the same constraints.
RobotParams parse_robot(const nlohmann::json& j);
BatteryModel parse_battery(const nlohmann::json& j);
AncillaryPowerModel parse_ancillary(const nlohmann::json& j);
SimplifiedMission parse_mission(const nlohmann::json& j);

struct ProfileConfig {
  ForceProfile profile;
  OfflineApproximation approx;
};

ProfileConfig parse_profile(const nlohmann::json& j);

// The scenario document may carry a power_noise_rel to apply after the run.
struct ScenarioConfig {
  Scenario scenario;
  double power_noise_rel = 0.0;
};

ScenarioConfig parse_scenario(const nlohmann::json& j);

// File loaders: IoError when the file cannot be read, ConfigError when the
// content does not validate. Error messages carry the file path.
RobotParams load_robot_file(const std::filesystem::path& path);
BatteryModel load_battery_file(const std::filesystem::path& path);
AncillaryPowerModel load_ancillary_file(const std::filesystem::path& path);
SimplifiedMission load_mission_file(const std::filesystem::path& path);
ProfileConfig load_profile_file(const std::filesystem::path& path);
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

// Calibration outputs as JSON fragments whose inner objects overlay the
// corresponding configuration documents.
nlohmann::json ancillary_fit_fragment(const AncillaryFit& fit);
nlohmann::json battery_fit_fragment(const BatteryDecayFit& fit);
nlohmann::json maneuvering_fit_fragment(const ManeuveringFit& fit);

}  // namespace orange
