#pragma once

#include <stdexcept>

namespace orange {

// Result of a range estimation. A mission with no resistive drain and no
// ancillary draw has no finite range; that outcome is carried as an explicit
// variant instead of an infinity so downstream arithmetic stays total.
class RangeEstimate {
 public:
  enum class Kind {
    Bounded,                // finite range in distance_m()
    Unbounded,              // nothing drains the battery per meter
    UnboundedWithinProfile  // force data ran out before the energy did
  };

  static RangeEstimate bounded(double distance_m) {
    return RangeEstimate(Kind::Bounded, distance_m, 0.0);
  }
  static RangeEstimate unbounded() { return RangeEstimate(Kind::Unbounded, 0.0, 0.0); }
  static RangeEstimate unbounded_within_profile(double profile_limit_m) {
    return RangeEstimate(Kind::UnboundedWithinProfile, 0.0, profile_limit_m);
  }

  Kind kind() const { return kind_; }
  bool is_bounded() const { return kind_ == Kind::Bounded; }

  double distance_m() const {
    if (kind_ != Kind::Bounded) throw std::logic_error("range estimate is not bounded");
    return distance_m_;
  }

  // Distance up to which the supplied force profile had data.
  double profile_limit_m() const {
    if (kind_ != Kind::UnboundedWithinProfile)
      throw std::logic_error("range estimate carries no profile limit");
    return profile_limit_m_;
  }

 private:
  RangeEstimate(Kind kind, double distance_m, double profile_limit_m)
      : kind_(kind), distance_m_(distance_m), profile_limit_m_(profile_limit_m) {}

  Kind kind_;
  double distance_m_;
  double profile_limit_m_;
};

}  // namespace orange
