#pragma once

#include <stdexcept>
#include <string>

namespace latpimc {

// Argument outside the mathematical domain (negative or non-finite Bessel argument, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Index or order outside a precomputed table.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Invalid lattice, thermodynamic or experiment configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Too few samples to form the requested statistics.
class StatisticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An adaptive numerical procedure stopped before reaching its tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double best_estimate, double achieved_tolerance)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        achieved_tolerance_(achieved_tolerance) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double achieved_tolerance() const noexcept { return achieved_tolerance_; }

 private:
  double best_estimate_;
  double achieved_tolerance_;
};

}  // namespace latpimc
