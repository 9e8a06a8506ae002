#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace orange {

// Piecewise-linear function sampled on a strictly increasing grid.
//
// Evaluation outside the grid clamps to the nearest endpoint; every clamped
// evaluation bumps a counter so callers can surface a warning. A single-node
// grid behaves as a constant function.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys);

  PiecewiseLinear(const PiecewiseLinear& other);
  PiecewiseLinear& operator=(const PiecewiseLinear& other);
  PiecewiseLinear(PiecewiseLinear&& other) noexcept;
  PiecewiseLinear& operator=(PiecewiseLinear&& other) noexcept;

  double value_at(double x) const;

  double front_x() const { return xs_.front(); }
  double back_x() const { return xs_.back(); }
  std::size_t size() const { return xs_.size(); }
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }

  double max_value() const;

  std::uint64_t clamp_count() const { return clamps_.load(std::memory_order_relaxed); }
  void reset_clamp_count() { clamps_.store(0, std::memory_order_relaxed); }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  mutable std::atomic<std::uint64_t> clamps_{0};
};

// Composite trapezoid rule over [a, b]. The supplied breakpoints (those that
// fall inside the interval) seed the node set, which is then uniformly
// refined until two successive estimates agree to rel_tol. Exact for
// integrands that are piecewise linear between the breakpoints.
double trapezoid_integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints, double rel_tol = 1e-4);

}  // namespace orange
