#pragma once

#include <numbers>

namespace torus {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// x = angle + 2*pi*turns with angle in [-pi, pi).
struct Reduced {
  double angle;
  long long turns;
};

/// Canonical "x mod 2pi" onto the half-open model interval [-pi, pi).
/// Throws DomainError for non-finite x.
Reduced reduce(double x);

/// A point of the torus, stored by its representative in [-pi, pi).
class Angle {
 public:
  explicit Angle(double x) : value_(reduce(x).angle) {}
  double value() const noexcept { return value_; }

 private:
  double value_;
};

}  // namespace torus
