#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace torus {

using Complex = std::complex<double>;

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  std::size_t max_intervals = 100000;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using ScalarIntegrand = std::function<Complex(double)>;
/// Writes the integrand components at x into out (out.size() == dim).
using VectorIntegrand = std::function<void(double, std::span<Complex>)>;

/// Global adaptive Gauss-Kronrod (7/15) integration of a complex-valued
/// integrand. `edges` is the initial partition (sorted, at least two points);
/// the worst subinterval is bisected until the summed error estimate drops
/// below max(abs_tol, rel_tol * |I|) or the interval budget is exhausted.
/// Endpoints are never evaluated, so integrable endpoint singularities are fine.
QuadResult<Complex> integrate(const ScalarIntegrand& f, std::span<const double> edges,
                              const QuadOptions& opts = {});

QuadResult<Complex> integrate(const ScalarIntegrand& f, double a, double b,
                              const QuadOptions& opts = {}, int initial_panels = 1);

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadOptions& opts = {}, int initial_panels = 1);

/// Vector-valued variant: all components share one adaptive mesh, so an
/// expensive common factor (a primitive evaluation, say) is computed once per
/// node. Error control uses the largest component error against
/// max(abs_tol, rel_tol * max_k |I_k|).
QuadResult<std::vector<Complex>> integrate_vector(const VectorIntegrand& f, std::size_t dim,
                                                  std::span<const double> edges,
                                                  const QuadOptions& opts = {});

/// Uniform partition of [a, b] into `panels` pieces (panels + 1 edges).
std::vector<double> uniform_edges(double a, double b, int panels);

}  // namespace torus
