#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "torus/primitive.hpp"
#include "torus/quadrature.hpp"

namespace torus {

/// Quadrature defaults for Stieltjes integrals. The budget is per smooth
/// segment; primitives with unresolvable oscillation (x sin x^-2 near 0)
/// would otherwise exhaust a large budget on every call.
inline constexpr QuadOptions kStieltjesQuad{.abs_tol = 1e-12, .rel_tol = 1e-10,
                                            .max_intervals = 2000};

/// Cubic c0 + c1 s + c2 s^2 + c3 s^3 in the local variable s = t - x_i.
using Cubic = std::array<Complex, 4>;

/// Periodic piecewise-cubic function with finite jumps. Piece i lives on
/// [x_i, x_{i+1}); the last piece wraps across pi to x_0 + 2pi. At a
/// breakpoint the pointwise value is (1 - lambda) g(x-) + lambda g(x+).
class BVFunction {
 public:
  BVFunction(std::vector<double> breakpoints, std::vector<Cubic> pieces, double lambda = 0.5);

  static BVFunction constant(Complex c);
  /// Indicator of the open arc (a, b), -pi <= a < b <= pi.
  static BVFunction indicator(double a, double b);
  /// Continuous piecewise-linear interpolant through (knots[i], values[i]),
  /// knots sorted in [-pi, pi), wrapping periodically.
  static BVFunction piecewise_linear(const std::vector<double>& knots,
                                     const std::vector<Complex>& values);
  /// Cubic Hermite interpolant of a smooth periodic f on `pieces` uniform cells.
  static BVFunction hermite(const std::function<Complex(double)>& f,
                            const std::function<Complex(double)>& df, int pieces);

  static BVFunction from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  std::size_t size() const noexcept { return x_.size(); }
  double breakpoint(std::size_t i) const { return x_[i]; }
  double length(std::size_t i) const { return len_[i]; }
  const Cubic& piece(std::size_t i) const { return p_[i]; }
  Complex left(std::size_t i) const;   // g(x_i-)
  Complex right(std::size_t i) const;  // g(x_i+)
  double lambda() const noexcept { return lambda_; }
  bool is_real() const noexcept { return real_; }

  BVFunction with_lambda(double lambda) const;

  /// lambda-normalized pointwise value.
  Complex operator()(double t) const;
  Complex right_limit(double t) const;
  Complex left_limit(double t) const;

  /// Piece index and local offset for t (right-continuous convention).
  std::pair<std::size_t, double> locate(double t) const;

  /// g(n t): every piece is replicated n times at (x_i + 2 pi m)/n.
  BVFunction dilate(int n) const;

  /// int_{-pi}^{pi} g(t) e^{-int} dt, exact for the piecewise cubic.
  Complex fourier(int n) const;

  friend BVFunction operator+(const BVFunction& a, const BVFunction& b);
  friend BVFunction operator*(Complex c, const BVFunction& g);

 private:
  std::vector<double> x_;
  std::vector<double> len_;
  std::vector<Cubic> p_;
  double lambda_;
  bool real_;
};

Complex eval_cubic(const Cubic& c, double s);
Complex eval_cubic_derivative(const Cubic& c, double s);

struct VariationReport {
  double variation = 0.0;
  double sup_norm = 0.0;
  double bv_norm = 0.0;
  double inf_abs = 0.0;  // inf |g| over pointwise values and one-sided limits
};

VariationReport variation(const BVFunction& g);

/// int_{(a,b]} F dg: smooth parts by adaptive quadrature of F g', plus
/// F(x_i) (g(x_i+) - g(x_i-)) for every breakpoint in (a, b]. Requires
/// 0 <= b - a <= 2pi.
Complex stieltjes(const std::function<Complex(double)>& F, const BVFunction& g, double a,
                  double b, const QuadOptions& opts = kStieltjesQuad);
Complex stieltjes(const Primitive& F, const BVFunction& g, double a, double b,
                  const QuadOptions& opts = kStieltjesQuad);

/// The product fg, with primitive H(x) = F(x) g(x+) - int_{(-pi,x]} F dg.
Distribution multiply_bv(const Distribution& f, const BVFunction& g,
                         const QuadOptions& opts = kStieltjesQuad);

/// int_{-pi}^{pi} f g = H(pi) without building the whole product.
Complex integrate_product(const Distribution& f, const BVFunction& g,
                          const QuadOptions& opts = kStieltjesQuad);

struct HolderReport {
  double lhs = 0.0;  // |int f g|
  double mid = 0.0;  // |int f| inf|g| + ||f|| Vg
  double rhs = 0.0;  // ||f|| ||g||_BV
  bool holds = true;
};

HolderReport holder_check(const Distribution& f, const BVFunction& g, double tol = 1e-8);

/// Named multipliers: indicator, const:<c>, sin, cos:<k>, tent, one-plus-cos.
BVFunction bv_catalog(const std::string& name);
std::vector<std::string> bv_test_set();

}  // namespace torus
