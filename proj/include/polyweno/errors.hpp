#pragma once

#include <stdexcept>
#include <string>

namespace polyweno {

/// Invalid user-supplied configuration (bad value, unknown key, grid too small).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rate function evaluated outside its domain (negative size).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature span with no published coefficient row.
class UnsupportedSpanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical blow-up: non-finite state, time step underflow or amplitude bound exceeded.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& reason, double time)
      : std::runtime_error(reason + " at t=" + std::to_string(time)), reason_(reason), time_(time) {}

  const std::string& reason() const noexcept { return reason_; }
  double time() const noexcept { return time_; }

 private:
  std::string reason_;
  double time_;
};

}  // namespace polyweno
