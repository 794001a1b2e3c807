#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "torus/angle.hpp"

namespace torus {

using Complex = std::complex<double>;

inline constexpr int kDefaultGrid = 1 << 14;

/// A continuous primitive F on [-pi, pi] with F(-pi) = 0, extended to the
/// line by F(x + 2*pi*n) = F(x) + n*F(pi).
class Primitive {
 public:
  using Fn = std::function<Complex(double)>;

  /// The zero primitive.
  Primitive();

  /// Wraps g and subtracts g(-pi), so the stored map vanishes at -pi exactly.
  /// g is only ever called on [-pi, pi].
  Primitive(Fn g, bool is_real, int grid_hint = kDefaultGrid);

  /// Piecewise-linear primitive through samples on the uniform grid
  /// x_i = -pi + 2*pi*i/N, i = 0..N. values[0] is forced to zero.
  static Primitive from_samples(std::vector<Complex> values, bool is_real);

  /// F on [-pi, pi]; arguments outside are clamped.
  Complex local(double x) const;
  /// F anywhere on the line via the extension rule.
  Complex operator()(double x) const;

  Complex drift() const noexcept { return drift_; }
  bool is_real() const noexcept { return real_; }
  int grid_hint() const noexcept { return grid_; }

 private:
  std::shared_ptr<const Fn> g_;
  Complex base_{};
  Complex drift_{};
  bool real_ = true;
  int grid_ = kDefaultGrid;
};

/// An element f = F' of A_c(T), held through its unique primitive.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(Primitive F) : F_(std::move(F)) {}

  const Primitive& primitive() const noexcept { return F_; }
  Complex drift() const noexcept { return F_.drift(); }
  bool is_real() const noexcept { return F_.is_real(); }

 private:
  Primitive F_;
};

/// F(b) - F(a) through the extension rule.
Complex integrate(const Distribution& f, double a, double b);

/// tau_s f: primitive x -> F(x - s) - F(-pi - s).
Distribution translate(const Distribution& f, double s);

Distribution operator+(const Distribution& f, const Distribution& g);
Distribution operator-(const Distribution& f, const Distribution& g);
Distribution operator*(Complex c, const Distribution& f);

}  // namespace torus
