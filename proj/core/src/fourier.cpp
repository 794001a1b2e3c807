#include "torus/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "torus/errors.hpp"

namespace torus {
namespace {

std::size_t interval_budget(std::size_t dim, std::size_t requested) {
  // Each panel stores dim complex values; keep the heap near 128 MiB.
  const std::size_t cap = std::max<std::size_t>(4000, (std::size_t{1} << 23) / dim);
  return std::min(requested, cap);
}

// int h(t) e^{-int} dt for n = -N..N on one mesh.
QuadResult<std::vector<Complex>> windowed(const std::function<Complex(double)>& h, int N,
                                          std::vector<double> edges, const CoeffOptions& opts) {
  const std::size_t dim = 2 * static_cast<std::size_t>(N) + 1;
  if (edges.empty()) {
    edges = uniform_edges(-kPi, kPi, opts.panels_per_mode * std::max(N, 1));
  }
  QuadOptions q = opts.quad;
  q.max_intervals = std::max(interval_budget(dim, q.max_intervals), edges.size());
  VectorIntegrand vf = [&h, N](double t, std::span<Complex> out) {
    const Complex v = h(t);
    const Complex step = std::polar(1.0, -t);
    Complex e = std::polar(1.0, N * t);  // e^{-int} at n = -N
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = v * e;
      e *= step;
    }
  };
  return integrate_vector(vf, dim, edges, q);
}

}  // namespace

FourierCoeffs::FourierCoeffs(int window, std::vector<Complex> values)
    : n_(window), v_(std::move(values)) {
  if (window < 0 || v_.size() != 2 * static_cast<std::size_t>(window) + 1) {
    throw DomainError("FourierCoeffs: window and value count disagree");
  }
}

Complex FourierCoeffs::operator[](int n) const {
  if (std::abs(n) > n_) throw DomainError("FourierCoeffs: index outside window");
  return v_[static_cast<std::size_t>(n + n_)];
}

Complex coeff(const Distribution& f, int n, const CoeffOptions& opts) {
  const Primitive& F = f.primitive();
  const Complex sign = (n % 2 == 0) ? 1.0 : -1.0;
  if (n == 0) return F.drift();
  auto integrand = [&F, n](double t) { return F.local(t) * std::polar(1.0, -n * t); };
  const auto r = integrate(integrand, -kPi, kPi, opts.quad, opts.panels_per_mode * std::abs(n));
  if (opts.strict && !r.converged) {
    throw ToleranceError("coeff: quadrature budget exhausted", r.value, r.error);
  }
  return sign * F.drift() + Complex(0.0, n) * r.value;
}

FourierCoeffs coeffs(const Distribution& f, int N, const CoeffOptions& opts) {
  if (N < 0) throw DomainError("coeffs: negative window");
  const Primitive& F = f.primitive();
  const auto r = windowed([&F](double t) { return F.local(t); }, N, {}, opts);
  if (opts.strict && !r.converged) {
    throw ToleranceError("coeffs: quadrature budget exhausted", r.value[N], r.error);
  }
  std::vector<Complex> v(r.value.size());
  for (int n = -N; n <= N; ++n) {
    const Complex sign = (n % 2 == 0) ? 1.0 : -1.0;
    v[n + N] = n == 0 ? F.drift() : sign * F.drift() + Complex(0.0, n) * r.value[n + N];
  }
  if (F.is_real()) {
    // Exact conjugate symmetry for real primitives.
    for (int n = 1; n <= N; ++n) v[N - n] = std::conj(v[N + n]);
  }
  return FourierCoeffs(N, std::move(v));
}

FourierCoeffs function_coeffs(const std::function<Complex(double)>& g, int N,
                              std::vector<double> edges, const CoeffOptions& opts) {
  if (N < 0) throw DomainError("function_coeffs: negative window");
  if (!edges.empty()) {
    std::vector<double> refined;
    const int per = std::max(1, opts.panels_per_mode * std::max(N, 1) /
                                     static_cast<int>(edges.size()));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      for (int k = 0; k < per; ++k) refined.push_back(edges[i] + (edges[i + 1] - edges[i]) * k / per);
    }
    refined.push_back(edges.back());
    edges = std::move(refined);
  }
  const auto r = windowed(g, N, std::move(edges), opts);
  if (opts.strict && !r.converged) {
    throw ToleranceError("function_coeffs: quadrature budget exhausted", r.value[N], r.error);
  }
  return FourierCoeffs(N, r.value);
}

double d_norm(const FourierCoeffs& c) {
  if (c.values().empty()) throw DomainError("d_norm: empty window");
  double best = 0.0;
  for (int n = -c.window(); n <= c.window(); ++n) {
    best = std::max(best, std::abs(c[n]) / (std::abs(n) + 1));
  }
  return best;
}

std::vector<GrowthRow> growth_report(const Distribution& f, int N, const CoeffOptions& opts,
                                     const NormOptions& norm_opts) {
  if (N < 1) throw DomainError("growth_report: N must be positive");
  return growth_report(f, coeffs(f, N, opts), norm_opts, opts.quad);
}

std::vector<GrowthRow> growth_report(const Distribution& f, const FourierCoeffs& c,
                                     const NormOptions& norm_opts, const QuadOptions& quad) {
  const int N = c.window();
  if (N < 1) throw DomainError("growth_report: N must be positive");
  const double norm = alexiewicz_norm_estimate(f, norm_opts).value;
  const Primitive& F = f.primitive();
  const double l1_of_F =
      integrate_real([&F](double t) { return std::abs(F.local(t)); }, -kPi, kPi, quad, 64);
  std::vector<double> shifted(static_cast<std::size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    shifted[n] = alexiewicz_norm_estimate(f - translate(f, kPi / n), norm_opts).value;
  }
  std::vector<GrowthRow> rows;
  const double r2 = std::numbers::sqrt2;
  for (int n = -N; n <= N; ++n) {
    if (n == 0) continue;
    const int m = std::abs(n);
    GrowthRow row;
    row.n = n;
    row.value = c[n];
    row.bound_f = 4.0 * r2 * m * norm;
    row.bound_h = 2.0 * r2 * m * shifted[m];
    row.bound_e = std::abs(F.drift()) + m * l1_of_F;
    row.ratio = std::abs(c[n]) / m;
    const double a = std::abs(c[n]);
    const double slack = 1e-7 * std::max(1.0, a);
    row.ok = a <= row.bound_f + slack && a <= row.bound_h + slack && a <= row.bound_e + slack;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace torus
