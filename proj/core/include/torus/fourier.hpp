#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "torus/norms.hpp"
#include "torus/primitive.hpp"
#include "torus/quadrature.hpp"

namespace torus {

struct CoeffOptions {
  QuadOptions quad{.abs_tol = 1e-10, .rel_tol = 1e-12, .max_intervals = 20000};
  int panels_per_mode = 32;  // initial panels per period: this times max(|n|, 1)
  // Throw ToleranceError when the budget runs out. Off by default: on primitives
  // with unresolved oscillation (xsin, example36) the Kronrod estimate runs
  // one to two orders above the true error.
  bool strict = false;
};

/// f^(n) = (-1)^n F(pi) + i n int F(t) e^{-int} dt. No 1/(2 pi) factor.
Complex coeff(const Distribution& f, int n, const CoeffOptions& opts = {});

/// Symmetric window of coefficients f^(n), |n| <= N.
class FourierCoeffs {
 public:
  FourierCoeffs() = default;
  FourierCoeffs(int window, std::vector<Complex> values);

  int window() const noexcept { return n_; }
  Complex operator[](int n) const;
  const std::vector<Complex>& values() const noexcept { return v_; }

 private:
  int n_ = 0;
  std::vector<Complex> v_;
};

/// All coefficients |n| <= N from one shared adaptive mesh.
FourierCoeffs coeffs(const Distribution& f, int N, const CoeffOptions& opts = {});

/// int_{-pi}^{pi} g(t) e^{-int} dt for |n| <= N, for an ordinary integrable
/// function g. `edges` seeds the mesh (breakpoints of g).
FourierCoeffs function_coeffs(const std::function<Complex(double)>& g, int N,
                              std::vector<double> edges = {}, const CoeffOptions& opts = {});

/// sup over the window of |c_n| / (|n| + 1).
double d_norm(const FourierCoeffs& c);

struct GrowthRow {
  int n = 0;
  Complex value;
  double bound_f = 0.0;  // 4 sqrt2 |n| ||f||
  double bound_h = 0.0;  // 2 sqrt2 |n| ||f - tau_{pi/n} f||
  double bound_e = 0.0;  // |F(pi)| + |n| int |F|
  double ratio = 0.0;    // |f^(n)| / |n|
  bool ok = true;
};

/// Rows for 1 <= |n| <= N, ordered n = -N..-1, 1..N.
std::vector<GrowthRow> growth_report(const Distribution& f, int N, const CoeffOptions& opts = {},
                                     const NormOptions& norm_opts = {});
/// Same, reusing a coefficient window; N is the window.
std::vector<GrowthRow> growth_report(const Distribution& f, const FourierCoeffs& c,
                                     const NormOptions& norm_opts = {},
                                     const QuadOptions& quad = CoeffOptions{}.quad);

}  // namespace torus
