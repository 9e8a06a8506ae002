#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orange/core_model.hpp"
#include "orange/generalized_estimator.hpp"
#include "orange/telemetry_sample.hpp"

namespace orange {

inline constexpr const char* kTelemetryCsvHeader = "t_s,x_m,v_mps,power_w,moving";

// Serializes samples to the fixed five-column CSV layout, UTF-8, LF endings,
// doubles in shortest round-trip form, moving as 0/1.
std::string telemetry_to_csv(std::span<const TelemetrySample> samples);
void write_telemetry_csv(const std::filesystem::path& path,
                         std::span<const TelemetrySample> samples);

struct TelemetryReadResult {
  std::vector<TelemetrySample> samples;
  std::size_t malformed_rows = 0;
  std::size_t total_rows = 0;  // data rows seen, malformed included
};

// Reads the CSV layout above. Malformed rows are skipped and counted; a bad
// header fails outright.
TelemetryReadResult read_telemetry_csv(std::istream& in);
TelemetryReadResult read_telemetry_csv_file(const std::filesystem::path& path);

struct ReplayPoint {
  double t_s = 0.0;
  std::optional<double> estimate_m;  // unset while the estimator has no motion yet
};

struct ReplayResult {
  std::vector<ReplayPoint> trace;
  OnlineEstimatorState final_state;
  std::size_t rejected_samples = 0;
  std::size_t malformed_rows = 0;  // parse failures, when fed from CSV
  std::size_t total_rows = 0;
};

// Feeds samples in order through the online estimator, emitting the estimate
// after every accepted sample. Samples the estimator rejects are skipped and
// counted. If more than 10% of the rows are unusable the stream is rejected
// with MalformedStreamError. Deterministic.
ReplayResult replay(std::span<const TelemetrySample> log, OnlineEstimatorState initial,
                    const BatteryModel& b);

// CSV parse plus replay; parse failures and estimator rejections count
// against the same 10% gate.
ReplayResult replay_stream(std::istream& in, OnlineEstimatorState initial,
                           const BatteryModel& b);

// Plot-friendly trace CSV: t_s,estimate_m plus an optional constant
// true_range_m column. Unavailable estimates serialize as empty fields.
std::string replay_trace_to_csv(std::span<const ReplayPoint> trace,
                                std::optional<double> true_range_m = std::nullopt);

struct TrialRecord {
  std::string label;  // free-form group key: velocity, battery, surface, ...
  double d_true_m = 0.0;
  double d_est_m = 0.0;
};

struct GroupStats {
  std::size_t n = 0;
  double mean_error_pct = 0.0;
  double std_error_pct = 0.0;  // population standard deviation
  double mean_accuracy_pct = 0.0;
  double std_accuracy_pct = 0.0;
};

struct ErrorReportRow {
  std::size_t trial = 0;
  std::string label;
  double d_true_m = 0.0;
  double d_est_m = 0.0;
  double error_pct = 0.0;     // 100 * |est - true| / true
  double accuracy_pct = 0.0;  // 100 - error_pct, by construction
};

struct ErrorReport {
  std::vector<ErrorReportRow> rows;
  std::map<std::string, GroupStats> groups;
  GroupStats overall;
  std::size_t rejected_trials = 0;  // trials with non-positive true range
};

// Per-trial error/accuracy rows plus grouped statistics. Trials with
// d_true <= 0 (or non-finite inputs) are rejected individually and counted.
ErrorReport build_report(std::span<const TrialRecord> trials);

std::string report_to_csv(const ErrorReport& report);
std::string report_summary_text(const ErrorReport& report);

// Trials CSV: header "label,d_true_m,d_est_m".
std::vector<TrialRecord> read_trials_csv(std::istream& in);

}  // namespace orange
