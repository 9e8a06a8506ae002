#include "orange/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orange {

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.empty() || xs_.size() != ys_.size())
    throw std::invalid_argument("piecewise grid needs matching, non-empty x and y arrays");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i]))
      throw std::invalid_argument("piecewise grid contains a non-finite sample");
    if (i > 0 && !(xs_[i] > xs_[i - 1]))
      throw std::invalid_argument("piecewise grid must be strictly increasing");
  }
}

PiecewiseLinear::PiecewiseLinear(const PiecewiseLinear& other)
    : xs_(other.xs_), ys_(other.ys_), clamps_(other.clamps_.load(std::memory_order_relaxed)) {}

PiecewiseLinear& PiecewiseLinear::operator=(const PiecewiseLinear& other) {
  if (this != &other) {
    xs_ = other.xs_;
    ys_ = other.ys_;
    clamps_.store(other.clamps_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  }
  return *this;
}

PiecewiseLinear::PiecewiseLinear(PiecewiseLinear&& other) noexcept
    : xs_(std::move(other.xs_)),
      ys_(std::move(other.ys_)),
      clamps_(other.clamps_.load(std::memory_order_relaxed)) {}

PiecewiseLinear& PiecewiseLinear::operator=(PiecewiseLinear&& other) noexcept {
  if (this != &other) {
    xs_ = std::move(other.xs_);
    ys_ = std::move(other.ys_);
    clamps_.store(other.clamps_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  }
  return *this;
}

double PiecewiseLinear::value_at(double x) const {
  if (x <= xs_.front()) {
    if (x < xs_.front()) clamps_.fetch_add(1, std::memory_order_relaxed);
    return ys_.front();
  }
  if (x >= xs_.back()) {
    if (x > xs_.back()) clamps_.fetch_add(1, std::memory_order_relaxed);
    return ys_.back();
  }
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  std::size_t lo = hi - 1;
  double w = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return ys_[lo] + w * (ys_[hi] - ys_[lo]);
}

double PiecewiseLinear::max_value() const { return *std::max_element(ys_.begin(), ys_.end()); }

double trapezoid_integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints, double rel_tol) {
  if (!(b >= a)) throw std::invalid_argument("integration interval is reversed");
  if (a == b) return 0.0;

  std::vector<double> nodes;
  nodes.push_back(a);
  for (double x : breakpoints)
    if (x > a && x < b) nodes.push_back(x);
  nodes.push_back(b);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = f(nodes[i]);

  auto sum = [&]() {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      total += 0.5 * (values[i] + values[i + 1]) * (nodes[i + 1] - nodes[i]);
    return total;
  };

  double estimate = sum();
  for (int pass = 0; pass < 16; ++pass) {
    // Split every interval in half and re-estimate.
    std::vector<double> next_nodes;
    std::vector<double> next_values;
    next_nodes.reserve(nodes.size() * 2);
    next_values.reserve(nodes.size() * 2);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      double mid = 0.5 * (nodes[i] + nodes[i + 1]);
      next_nodes.push_back(nodes[i]);
      next_values.push_back(values[i]);
      if (mid > nodes[i] && mid < nodes[i + 1]) {
        next_nodes.push_back(mid);
        next_values.push_back(f(mid));
      }
    }
    next_nodes.push_back(nodes.back());
    next_values.push_back(values.back());
    nodes = std::move(next_nodes);
    values = std::move(next_values);

    double refined = sum();
    double scale = std::max({std::abs(refined), std::abs(estimate), 1e-300});
    bool converged = std::abs(refined - estimate) <= rel_tol * scale;
    estimate = refined;
    if (converged) break;
  }
  return estimate;
}

}  // namespace orange
