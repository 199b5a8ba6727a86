#pragma once

#include <stdexcept>
#include <string>

namespace chemolab {

/// Base class for all failures raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration text failed to parse or validate. Carries the 1-based line
/// number when the problem is tied to a specific line (-1 otherwise).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message, int line = -1)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A time integration aborted. Carries the failure time so callers can
/// report partial trajectories.
class SimulationError : public Error {
 public:
  enum class Kind { BlowUp, Positivity };

  SimulationError(Kind kind, double time, const std::string& message)
      : Error(message), kind_(kind), time_(time) {}

  Kind kind() const noexcept { return kind_; }
  double time() const noexcept { return time_; }

 private:
  Kind kind_;
  double time_;
};

}  // namespace chemolab
