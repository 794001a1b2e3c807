#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

/// Input outside the domain of an operation (non-finite argument, bad range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unknown identifier (catalog name, kernel kind, command).
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A refinement loop hit its budget before meeting the requested tolerance.
/// The best available estimate is carried along so callers can still report it.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, std::complex<double> estimate,
                 double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_(error_estimate) {}

  std::complex<double> estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_; }

 private:
  std::complex<double> estimate_;
  double error_;
};

/// A limit sequence failed to become Cauchy within the depth cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> sequence)
      : std::runtime_error(what), sequence_(std::move(sequence)) {}

  const std::vector<double>& sequence() const noexcept { return sequence_; }

 private:
  std::vector<double> sequence_;
};

/// A mathematical inequality or identity that must hold was violated beyond
/// tolerance. This always indicates a bug, never bad input.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torus
