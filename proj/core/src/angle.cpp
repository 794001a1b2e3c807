#include "torus/angle.hpp"

#include <cmath>

#include "torus/errors.hpp"

namespace torus {

Reduced reduce(double x) {
  if (!std::isfinite(x)) throw DomainError("reduce: non-finite angle");
  if (x >= -kPi && x < kPi) return {x, 0};
  auto turns = static_cast<long long>(std::floor((x + kPi) / kTwoPi));
  double r = x - static_cast<double>(turns) * kTwoPi;
  // floor() of a rounded quotient can land one turn off near the seams.
  if (r < -kPi) {
    r += kTwoPi;
    --turns;
  } else if (r >= kPi) {
    r -= kTwoPi;
    ++turns;
  }
  if (r < -kPi) r = -kPi;
  return {r, turns};
}

}  // namespace torus
