#pragma once

#include <span>

#include "torus/primitive.hpp"

namespace torus {

struct NormOptions {
  int grid = 0;             // starting intervals per period; 0 uses the primitive's hint
  int max_grid = 1 << 18;   // refinement cap
  double rel_tol = 1e-6;    // accepted relative change between dyadic levels
  double abs_floor = 1e-13; // changes below this count as converged
  bool polish = true;       // local continuous refinement of the best grid pair
  bool refine = true;       // false: single evaluation at `grid`
};

struct NormEstimate {
  double value = 0.0;       // best estimate (polished when enabled)
  double grid_value = 0.0;  // plain grid maximum at the final level
  double error = 0.0;       // change against the previous dyadic level
  int grid = 0;             // intervals per period at the final level
  bool converged = false;
  double alpha = 0.0;       // maximizing interval [alpha, beta]
  double beta = 0.0;
};

/// max over beta - alpha in [0, 2pi] of |F(beta) - F(alpha)|, refined over
/// nested dyadic grids. Never throws for lack of convergence.
NormEstimate alexiewicz_norm_estimate(const Distribution& f, const NormOptions& opts = {});

/// As above, but throws ToleranceError (carrying the estimate) when the
/// refinement cap is reached first.
double alexiewicz_norm(const Distribution& f, const NormOptions& opts = {});

/// sup |F(x)| over [-pi, pi].
NormEstimate alexiewicz_norm_equiv_estimate(const Distribution& f, const NormOptions& opts = {});
double alexiewicz_norm_equiv(const Distribution& f, const NormOptions& opts = {});

/// Grid-only norm of a primitive sampled at x_i = -pi + 2*pi*i/N, i = 0..N.
/// samples[0] is taken as F(-pi) and samples[N] as the drift.
double grid_alexiewicz_norm(std::span<const Complex> samples);

/// sup over 0 < |t| < delta of ||f - tau_t f||. The t values come from a
/// fixed set {pi * 2^-k * (1 + j/8)}, so the result is monotone in delta.
double modulus_of_continuity(const Distribution& f, double delta,
                             const NormOptions& opts = {.grid = 1 << 12, .refine = false});

}  // namespace torus
