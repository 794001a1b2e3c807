#pragma once

#include <vector>

#include "torus/bv.hpp"
#include "torus/fourier.hpp"
#include "torus/kernels.hpp"

namespace torus {

struct ParsevalSum {
  int n = 0;
  Complex value;    // (1/2pi) sum_{|k|<=n} (1 - |k|/(n+1)) f^(k) g^(-k)
  Complex printed;  // sum_{|k|<=n} (1 - |k|/(n+1)) f^(k) g^(k), no 1/2pi, no reflection
  Complex target;   // int f g
  double gap = 0.0; // |value - target|
};

ParsevalSum parseval_sum(const Distribution& f, const BVFunction& g, int n,
                         const CoeffOptions& opts = {});
/// Reuses f's coefficients (window >= n) and a known target.
ParsevalSum parseval_sum(const FourierCoeffs& fc, const BVFunction& g, int n, Complex target);

struct FejerLemmaRow {
  int n = 0;
  Complex integral;     // I_n = int f(t) g(nt) dt
  double over_n = 0.0;  // |I_n| / n
};

struct FejerLemmaReport {
  std::vector<FejerLemmaRow> rows;
  Complex limit;  // f^(0) g^(0) / 2pi, the limit of I_n when f is Lebesgue integrable
};

FejerLemmaReport fejer_lemma_sweep(const Distribution& f, const BVFunction& g,
                                   const std::vector<int>& ns);

struct BVCoefficientRow {
  int n = 0;
  double sup = 0.0;
  double variation = 0.0;
  double bv_norm = 0.0;
};

struct BVCoefficientReport {
  std::vector<BVCoefficientRow> rows;
  double max_bv_norm = 0.0;
  double bound = 0.0;
  bool holds = true;
};

/// BV norms of the Cesaro means sigma_n[S] = (1/2pi) sum (1 - |k|/(n+1)) a_k e^{ikt}
/// for n = 0..n_max, checked against `bound`.
BVCoefficientReport bv_coefficient_test(const FourierCoeffs& a, double bound, int n_max);

/// sup |p| + int |p'| for a trigonometric polynomial.
BVCoefficientRow trig_bv_norm(const TrigPolynomial& p);

struct FubiniReport {
  double a = 0.0, b = 0.0;
  Complex lhs;  // int_a^b (f * g)(x) dx
  Complex rhs;  // int g(y) (F(b - y) - F(a - y)) dy
  double gap = 0.0;
  bool ok = true;
};

FubiniReport fubini_check(const Distribution& f, const BVFunction& g, double a, double b,
                          double tol = 1e-6);

struct ApproximationRow {
  int n = 0;
  double distance = 0.0;  // ||k_n * f - f||
};

/// Norm distance of the kernel means of f from f: Cesaro means for fejer, partial
/// sums for dirichlet, 2 sigma_{2n+1} - sigma_n for vallee-poussin.
std::vector<ApproximationRow> approximation_sweep(const Distribution& f, KernelKind kind,
                                                  const std::vector<int>& ns,
                                                  const CoeffOptions& opts = {});
std::vector<ApproximationRow> approximation_sweep(const Distribution& f, const FourierCoeffs& fc,
                                                  KernelKind kind, const std::vector<int>& ns);

}  // namespace torus
