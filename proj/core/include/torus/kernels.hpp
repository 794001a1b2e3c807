#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "torus/fourier.hpp"
#include "torus/primitive.hpp"

namespace torus {

/// sum_{|k| <= degree} c_k e^{ikt}.
class TrigPolynomial {
 public:
  TrigPolynomial() : TrigPolynomial(0, {Complex{}}) {}
  TrigPolynomial(int degree, std::vector<Complex> coefficients);

  int degree() const noexcept { return n_; }
  Complex operator[](int k) const;
  const std::vector<Complex>& coefficients() const noexcept { return c_; }
  bool is_real() const;

  Complex operator()(double t) const;
  Complex derivative(double t) const;

  /// The distribution p dt, with primitive c_0 (x + pi) + sum c_k (e^{ikx} - e^{-ik pi}) / (ik).
  Distribution to_distribution() const;

 private:
  int n_;
  std::vector<Complex> c_;
};

enum class KernelKind { fejer, dirichlet, vallee_poussin };

KernelKind parse_kernel_kind(const std::string& name);
std::string to_string(KernelKind kind);

/// Coefficient form of the kernel. Fejer: (1/2pi)(1 - |k|/(n+1)); Dirichlet:
/// 1 for |k| <= n (unnormalized); de la Vallee Poussin: 2 fejer(2n+1) - fejer(n).
TrigPolynomial kernel(KernelKind kind, int n);

/// The same kernels from their sine-ratio closed forms; the removable point
/// at t = 0 is handled by a series below |t| < 1e-4.
double kernel_closed_form(KernelKind kind, int n, double t);

struct SummabilityRow {
  int n = 0;
  double integral = 0.0;  // int k_n
  double l1 = 0.0;        // int |k_n|
  std::map<double, double> tail;  // delta -> int_{|s|>delta} |k_n|
};

struct SummabilityReport {
  bool integral_one = true;
  double l1_bound = 0.0;  // max over n of int |k_n|
  bool l1_bounded = true; // no growth over the second half of the sweep
  std::map<double, double> tail;  // at n_max
  std::vector<SummabilityRow> rows;
};

/// Rows for n in `ns` (or 1..n_max when ns is empty).
SummabilityReport validate_summability(KernelKind kind, int n_max,
                                       const std::vector<double>& deltas,
                                       const std::vector<int>& ns = {});

/// Lebesgue constant (1/2pi) int |D_n|.
double dirichlet_lebesgue_constant(int n);

struct DirichletNorm {
  double quadrature = 0.0;   // sliding-window norm of the exact primitive
  double closed_form = 0.0;  // 4pi/(2n+1) + 4 sum sin(2 pi k/(2n+1))/k; 2pi at n = 0
};

/// ||D_n|| for the unnormalized Dirichlet kernel.
DirichletNorm dirichlet_alexiewicz_norm(int n);

/// sigma_n[f] = (1/2pi) sum (1 - |k|/(n+1)) f^(k) e^{ikt}.
TrigPolynomial cesaro_mean(const Distribution& f, int n, const CoeffOptions& opts = {});
TrigPolynomial cesaro_mean(const FourierCoeffs& c, int n);

/// s_n[f] = (1/2pi) sum_{|k|<=n} f^(k) e^{ikt}, the convolution with D_n / (2pi).
TrigPolynomial partial_sum(const Distribution& f, int n, const CoeffOptions& opts = {});
TrigPolynomial partial_sum(const FourierCoeffs& c, int n);

struct DivergenceReport {
  int n = 0;
  int m = 0;                  // 2n: index of D_m and F_m
  double osc = 0.0;           // max - min of D_m * F_m
  double norm = 0.0;          // ||F_m'||, expected 2
  double ratio = 0.0;         // osc / log n
  double value_at_pi = 0.0;   // (D_m * F_m)(pi)
  double value_at_zero = 0.0;
};

/// F_m(t) = -sin((m + 1/2) t) on [-m pi/(m + 1/2), 0], 0 elsewhere, m = 2n.
double divergence_primitive(int m, double t);
/// Exact int F_m(t) e^{-ikt} dt.
Complex divergence_primitive_coeff(int m, int k);

DivergenceReport divergence_construction(int n);

}  // namespace torus
