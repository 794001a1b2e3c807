#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "torus/bv.hpp"
#include "torus/kernels.hpp"

namespace testing {

using torus::Complex;
using torus::kPi;
using torus::kTwoPi;

// Seeded generator for property cases; every suite starts from a fixed seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  double angle() { return uniform(-kPi, kPi); }

  Complex value(bool real) { return real ? Complex(uniform(-2, 2)) : Complex(uniform(-2, 2), uniform(-2, 2)); }

  torus::TrigPolynomial trig(int max_degree, bool real) {
    const int n = integer(0, max_degree);
    std::vector<Complex> c(2 * n + 1);
    for (int k = 0; k <= n; ++k) {
      const Complex v = value(real) / (1.0 + k);
      c[n + k] = v;
      c[n - k] = real ? std::conj(v) : (k == 0 ? v : value(false) / (1.0 + k));
    }
    if (real) c[n] = c[n].real();
    return torus::TrigPolynomial(n, std::move(c));
  }

  // Step function with 1..max_pieces pieces and random breakpoints.
  torus::BVFunction steps(int max_pieces, bool real) {
    const int m = integer(1, max_pieces);
    std::vector<double> x{-kPi};
    while (static_cast<int>(x.size()) < m) x.push_back(angle());
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    std::vector<torus::Cubic> p;
    for (std::size_t i = 0; i < x.size(); ++i) p.push_back({value(real), 0.0, 0.0, 0.0});
    return torus::BVFunction(x, p);
  }

  // Piecewise cubic with jumps.
  torus::BVFunction cubic(int max_pieces, bool real) {
    torus::BVFunction s = steps(max_pieces, real);
    std::vector<double> x;
    std::vector<torus::Cubic> p;
    for (std::size_t i = 0; i < s.size(); ++i) {
      x.push_back(s.breakpoint(i));
      const double h = s.length(i);
      p.push_back({value(real), value(real) / h, value(real) / (h * h), value(real) / (h * h * h)});
    }
    return torus::BVFunction(x, p);
  }

 private:
  std::mt19937_64 rng_;
};

// Composite Simpson on [a, b] with n (even) panels; a plain oracle independent of the library.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

inline Complex simpson_c(const std::function<Complex(double)>& f, double a, double b, int n) {
  const double re = simpson([&](double t) { return f(t).real(); }, a, b, n);
  const double im = simpson([&](double t) { return f(t).imag(); }, a, b, n);
  return {re, im};
}

}  // namespace testing
