#pragma once

#include <stdexcept>

namespace orange {

// Configuration document or input stream fails validation. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read, or written. CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical or data-consistency failure during a computation. CLI exit code 3.
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fit has no unique solution for one or more coefficients.
class UnderdeterminedError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

// Measurements contradict the physical model (e.g. loaded power below idle).
class InconsistentDataError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

// A forward simulation cannot drain the battery.
class NonTerminatingError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

// Too large a fraction of a telemetry stream was unusable.
class MalformedStreamError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace orange
