#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "torus/bv.hpp"
#include "torus/primitive.hpp"
#include "torus/quadrature.hpp"

namespace torus {

/// A continuous 2pi-periodic function given by an evaluator.
class PeriodicFunction {
 public:
  using Fn = std::function<Complex(double)>;

  PeriodicFunction(Fn f, bool is_real);

  /// Evaluates at the representative of x in [-pi, pi).
  Complex operator()(double x) const;
  bool is_real() const noexcept { return real_; }

  /// Values at x_i = -pi + 2 pi i / n, i = 0..n-1.
  std::vector<Complex> sample(int n) const;

  /// The distribution whose primitive is x -> int_{-pi}^x h, built from
  /// 10-point Gauss-Legendre cell integrals on n uniform cells.
  Distribution running_integral(int n = 1024) const;

 private:
  std::shared_ptr<const Fn> f_;
  bool real_;
};

/// (f * g)(x) = g(-pi+) F(pi) + int_{(-pi,pi]} F(x - y) dg(y).
PeriodicFunction convolve_bv(const Distribution& f, const BVFunction& g,
                             const QuadOptions& opts = kStieltjesQuad);

/// An integrable function, possibly unbounded. `edges` must include every
/// point where g is singular or discontinuous; cells are split there.
struct L1Function {
  std::function<Complex(double)> eval;
  std::vector<double> edges;
};

/// ||g||_1, certified by adaptive quadrature. Throws DomainError when the
/// quadrature does not settle.
double l1_norm(const L1Function& g);

struct L1Convolution {
  Distribution result;
  int depth = 0;                    // 2^depth cells in the final step function
  int grid = 0;                     // working grid of the returned primitive
  std::vector<double> differences;  // ||f*g_k - f*g_{k+1}|| per level
};

/// f * g for g in L^1 as the limit of f * g_k, g_k the average of g on 2^k
/// dyadic cells. Stops once successive primitives differ by less than tol in
/// the Alexiewicz norm; throws ConvergenceError (with the sequence) past
/// max_depth.
L1Convolution convolve_l1(const Distribution& f, const L1Function& g, double tol = 1e-6,
                          int max_depth = 16, int start_depth = 4);

struct ConvolutionTheoremRow {
  int n = 0;
  Complex lhs;  // (f*g)^(n) from quadrature of the continuous output
  Complex rhs;  // f^(n) g^(n)
  double gap = 0.0;
};

struct ConvolutionTheoremReport {
  std::vector<ConvolutionTheoremRow> rows;
  double max_gap = 0.0;
  bool ok = true;
};

ConvolutionTheoremReport convolution_theorem_check(const Distribution& f, const BVFunction& g,
                                                   int N, double tol = 1e-5);

struct BilinearRow {
  int n = 0;
  double cut = 0.0;          // (n pi)^{-1/4}
  double distance = 0.0;     // ||f - f_n||
  double distance_bound = 0.0;  // (n pi)^{-1/2}
  double lower = 0.0;        // 1/4 int_{pi^-4}^{n pi} x^{-3/4} sin^2 x dx
  double lower_direct = 0.0; // int_cut^pi sin^2(t^-4) t^-2 dt
  double ratio = 0.0;        // lower / n^{1/4}
  double ratio_target = 0.0; // pi^{1/4} / 2
};

/// ||f - f_n|| shrinks while ||g * f_n|| grows like n^{1/4}: the convolution
/// admits no bilinear bound in the Alexiewicz norm.
std::vector<BilinearRow> bilinear_unboundedness_demo(const std::vector<int>& ns = {4, 16, 64});

}  // namespace torus
