#include "torus/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "torus/convolution.hpp"
#include "torus/errors.hpp"
#include "torus/norms.hpp"

namespace torus {

ParsevalSum parseval_sum(const FourierCoeffs& fc, const BVFunction& g, int n, Complex target) {
  if (n < 0 || n > fc.window()) throw DomainError("parseval_sum: n outside the coefficient window");
  ParsevalSum out;
  out.n = n;
  for (int k = -n; k <= n; ++k) {
    const double w = 1.0 - std::abs(k) / (n + 1.0);
    out.value += w * fc[k] * g.fourier(-k);
    out.printed += w * fc[k] * g.fourier(k);
  }
  out.value /= kTwoPi;
  out.target = target;
  out.gap = std::abs(out.value - out.target);
  return out;
}

ParsevalSum parseval_sum(const Distribution& f, const BVFunction& g, int n,
                         const CoeffOptions& opts) {
  return parseval_sum(coeffs(f, n, opts), g, n, integrate_product(f, g));
}

FejerLemmaReport fejer_lemma_sweep(const Distribution& f, const BVFunction& g,
                                   const std::vector<int>& ns) {
  FejerLemmaReport rep;
  rep.limit = f.drift() * g.fourier(0) / kTwoPi;
  for (int n : ns) {
    if (n < 1) throw DomainError("fejer_lemma_sweep: n must be positive");
    FejerLemmaRow row;
    row.n = n;
    row.integral = integrate_product(f, g.dilate(n));
    row.over_n = std::abs(row.integral) / n;
    rep.rows.push_back(row);
  }
  return rep;
}

BVCoefficientRow trig_bv_norm(const TrigPolynomial& p) {
  const int n = p.degree();
  BVCoefficientRow row;
  row.n = n;
  const int samples = 16 * (2 * n + 1) + 64;
  const double h = kTwoPi / samples;
  double best = -1.0, xbest = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = -kPi + i * h;
    const double v = std::abs(p(x));
    if (v > best) best = v, xbest = x;
  }
  constexpr double g = 0.6180339887498949;
  double a = xbest - h, b = xbest + h;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = std::abs(p(x1)), f2 = std::abs(p(x2));
  for (int it = 0; it < 50; ++it) {
    if (f1 < f2) {
      a = x1, x1 = x2, f1 = f2, x2 = a + g * (b - a), f2 = std::abs(p(x2));
    } else {
      b = x2, x2 = x1, f2 = f1, x1 = b - g * (b - a), f1 = std::abs(p(x1));
    }
  }
  row.sup = std::max({best, f1, f2});
  if (n > 0) {
    const QuadOptions q{.abs_tol = 1e-12, .rel_tol = 1e-10, .max_intervals = 20000};
    row.variation = integrate_real([&p](double t) { return std::abs(p.derivative(t)); }, -kPi,
                                   kPi, q, 8 * (n + 1));
  }
  row.bv_norm = row.sup + row.variation;
  return row;
}

BVCoefficientReport bv_coefficient_test(const FourierCoeffs& a, double bound, int n_max) {
  if (n_max < 0 || n_max > a.window()) {
    throw DomainError("bv_coefficient_test: n_max outside the coefficient window");
  }
  BVCoefficientReport rep;
  rep.bound = bound;
  for (int n = 0; n <= n_max; ++n) {
    BVCoefficientRow row = trig_bv_norm(cesaro_mean(a, n));
    row.n = n;
    rep.max_bv_norm = std::max(rep.max_bv_norm, row.bv_norm);
    rep.rows.push_back(row);
  }
  rep.holds = rep.max_bv_norm <= bound;
  return rep;
}

FubiniReport fubini_check(const Distribution& f, const BVFunction& g, double a, double b,
                          double tol) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("fubini_check: need finite a < b");
  }
  FubiniReport rep;
  rep.a = a;
  rep.b = b;

  const PeriodicFunction h = convolve_bv(f, g);
  const QuadOptions outer{.abs_tol = 1e-9, .rel_tol = 1e-10, .max_intervals = 2000};
  // f * g inherits the rough points of F shifted by g's breakpoints.
  std::vector<double> xs{a, b};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g.right(i) - g.left(i)) <= 1e-12 * (1.0 + std::abs(g.left(i)))) continue;
    for (double s : {0.0, kPi}) {
      const double base = g.breakpoint(i) + s;
      for (double x = base + kTwoPi * std::ceil((a - base) / kTwoPi); x < b; x += kTwoPi) {
        if (x > a) xs.push_back(x);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](double u, double v) { return std::abs(u - v) < 1e-14; }),
           xs.end());
  rep.lhs = integrate([&h](double x) { return h(x); }, std::span<const double>(xs), outer).value;

  // F(c - y) is only continuous where c - y crosses 0 or pi; split there and at g's jumps.
  std::vector<double> edges{-kPi, kPi};
  for (std::size_t i = 0; i < g.size(); ++i) edges.push_back(g.breakpoint(i));
  for (double c : {a, b}) {
    for (double s : {0.0, kPi}) {
      const double y = reduce(c - s).angle;
      edges.push_back(y);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double u, double v) { return std::abs(u - v) < 1e-14; }),
              edges.end());
  const Primitive& F = f.primitive();
  const QuadOptions inner{.abs_tol = 1e-11, .rel_tol = 1e-11, .max_intervals = 20000};
  rep.rhs = integrate([&](double y) { return g(y) * (F(b - y) - F(a - y)); },
                      std::span<const double>(edges), inner)
                .value;
  rep.gap = std::abs(rep.lhs - rep.rhs);
  rep.ok = rep.gap < tol;
  return rep;
}

namespace {

TrigPolynomial kernel_mean(const FourierCoeffs& fc, KernelKind kind, int n) {
  switch (kind) {
    case KernelKind::fejer: return cesaro_mean(fc, n);
    case KernelKind::dirichlet: return partial_sum(fc, n);
    case KernelKind::vallee_poussin: {
      const TrigPolynomial hi = cesaro_mean(fc, 2 * n + 1);
      const TrigPolynomial lo = cesaro_mean(fc, n);
      std::vector<Complex> c(hi.coefficients().size());
      const int d = hi.degree();
      for (int k = -d; k <= d; ++k) c[k + d] = 2.0 * hi[k] - lo[k];
      return TrigPolynomial(d, std::move(c));
    }
  }
  throw DomainError("kernel_mean: bad kind");
}

int window_for(KernelKind kind, int n) { return kind == KernelKind::vallee_poussin ? 2 * n + 1 : n; }

}  // namespace

std::vector<ApproximationRow> approximation_sweep(const Distribution& f, const FourierCoeffs& fc,
                                                  KernelKind kind, const std::vector<int>& ns) {
  std::vector<ApproximationRow> rows;
  for (int n : ns) {
    if (n < 0 || window_for(kind, n) > fc.window()) {
      throw DomainError("approximation_sweep: n outside the coefficient window");
    }
    const Distribution diff = kernel_mean(fc, kind, n).to_distribution() - f;
    rows.push_back({n, alexiewicz_norm_estimate(diff).value});
  }
  return rows;
}

std::vector<ApproximationRow> approximation_sweep(const Distribution& f, KernelKind kind,
                                                  const std::vector<int>& ns,
                                                  const CoeffOptions& opts) {
  int w = 0;
  for (int n : ns) w = std::max(w, window_for(kind, n));
  return approximation_sweep(f, coeffs(f, w, opts), kind, ns);
}

}  // namespace torus
