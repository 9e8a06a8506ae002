#pragma once

namespace orange {

// One row of a telemetry stream. Timestamps and cumulative distance are
// non-decreasing within a stream; power is the instantaneous electrical draw.
struct TelemetrySample {
  double t_s = 0.0;
  double x_m = 0.0;
  double v_mps = 0.0;
  double power_w = 0.0;
  bool moving = false;
};

}  // namespace orange
