#include "torus/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "torus/errors.hpp"
#include "torus/norms.hpp"

namespace torus {
namespace {

// sin(m a) / sin(a), with its even series near a = 0.
double sine_ratio(int m, double a) {
  if (std::abs(a) < 5e-5 && m * std::abs(a) < 0.025) {
    const double mm = static_cast<double>(m) * m;
    const double a2 = a * a;
    return m * (1.0 - (mm - 1.0) * a2 / 6.0 + (mm - 1.0) * (3.0 * mm - 7.0) * a2 * a2 / 360.0);
  }
  return std::sin(m * a) / std::sin(a);
}

double fejer_closed(int n, double t) {
  const double s = sine_ratio(n + 1, 0.5 * t);
  return s * s / (kTwoPi * (n + 1));
}

double integrate_abs(const std::function<double(double)>& k, double a, double b, int panels) {
  const QuadOptions q{.abs_tol = 1e-13, .rel_tol = 1e-11, .max_intervals = 100000};
  return integrate_real([&k](double t) { return std::abs(k(t)); }, a, b, q, panels);
}

}  // namespace

TrigPolynomial::TrigPolynomial(int degree, std::vector<Complex> coefficients)
    : n_(degree), c_(std::move(coefficients)) {
  if (degree < 0 || c_.size() != 2 * static_cast<std::size_t>(degree) + 1) {
    throw DomainError("TrigPolynomial: need 2*degree + 1 coefficients");
  }
}

Complex TrigPolynomial::operator[](int k) const {
  if (std::abs(k) > n_) return {};
  return c_[static_cast<std::size_t>(k + n_)];
}

bool TrigPolynomial::is_real() const {
  for (int k = 0; k <= n_; ++k) {
    if (std::abs((*this)[k] - std::conj((*this)[-k])) > 1e-14 * (1.0 + std::abs((*this)[k]))) {
      return false;
    }
  }
  return true;
}

Complex TrigPolynomial::operator()(double t) const {
  const Complex step = std::polar(1.0, t);
  Complex e = std::polar(1.0, -n_ * t);
  Complex s{};
  for (const auto& c : c_) {
    s += c * e;
    e *= step;
  }
  return s;
}

Complex TrigPolynomial::derivative(double t) const {
  const Complex step = std::polar(1.0, t);
  Complex e = std::polar(1.0, -n_ * t);
  Complex s{};
  for (int k = -n_; k <= n_; ++k) {
    s += Complex(0.0, k) * c_[k + n_] * e;
    e *= step;
  }
  return s;
}

Distribution TrigPolynomial::to_distribution() const {
  auto self = std::make_shared<const TrigPolynomial>(*this);
  return Distribution(Primitive(
      [self](double x) {
        const int n = self->degree();
        Complex s = (*self)[0] * (x + kPi);
        const Complex step = std::polar(1.0, x);
        Complex e = step;
        double sign = -1.0;  // e^{-ik pi} = e^{ik pi} = (-1)^k
        for (int k = 1; k <= n; ++k) {
          const Complex ec = std::conj(e);
          s += (*self)[k] * (e - sign) / Complex(0.0, k);
          s += (*self)[-k] * (ec - sign) / Complex(0.0, -k);
          e *= step;
          sign = -sign;
        }
        return s;
      },
      is_real()));
}

KernelKind parse_kernel_kind(const std::string& name) {
  if (name == "fejer") return KernelKind::fejer;
  if (name == "dirichlet") return KernelKind::dirichlet;
  if (name == "vallee-poussin" || name == "vallee_poussin") return KernelKind::vallee_poussin;
  throw LookupError("unknown kernel '" + name + "' (fejer, dirichlet, vallee-poussin)");
}

std::string to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::fejer: return "fejer";
    case KernelKind::dirichlet: return "dirichlet";
    case KernelKind::vallee_poussin: return "vallee-poussin";
  }
  return "?";
}

TrigPolynomial kernel(KernelKind kind, int n) {
  if (n < 0) throw DomainError("kernel: n must be nonnegative");
  switch (kind) {
    case KernelKind::fejer: {
      std::vector<Complex> c(2 * n + 1);
      for (int k = -n; k <= n; ++k) c[k + n] = (1.0 - std::abs(k) / (n + 1.0)) / kTwoPi;
      return TrigPolynomial(n, std::move(c));
    }
    case KernelKind::dirichlet:
      return TrigPolynomial(n, std::vector<Complex>(2 * n + 1, 1.0));
    case KernelKind::vallee_poussin: {
      const int d = 2 * n + 1;
      const TrigPolynomial hi = kernel(KernelKind::fejer, d);
      const TrigPolynomial lo = kernel(KernelKind::fejer, n);
      std::vector<Complex> c(2 * d + 1);
      for (int k = -d; k <= d; ++k) c[k + d] = 2.0 * hi[k] - lo[k];
      return TrigPolynomial(d, std::move(c));
    }
  }
  throw DomainError("kernel: bad kind");
}

double kernel_closed_form(KernelKind kind, int n, double t) {
  if (n < 0) throw DomainError("kernel_closed_form: n must be nonnegative");
  t = reduce(t).angle;
  switch (kind) {
    case KernelKind::fejer: return fejer_closed(n, t);
    case KernelKind::dirichlet: return sine_ratio(2 * n + 1, 0.5 * t);
    case KernelKind::vallee_poussin: return 2.0 * fejer_closed(2 * n + 1, t) - fejer_closed(n, t);
  }
  throw DomainError("kernel_closed_form: bad kind");
}

SummabilityReport validate_summability(KernelKind kind, int n_max,
                                       const std::vector<double>& deltas,
                                       const std::vector<int>& ns) {
  if (n_max < 1) throw DomainError("validate_summability: n_max must be positive");
  for (double d : deltas) {
    if (!(d > 0.0 && d <= kPi)) throw DomainError("validate_summability: delta must lie in (0, pi]");
  }
  std::vector<int> index = ns;
  if (index.empty()) {
    for (int n = 1; n <= n_max; ++n) index.push_back(n);
  }
  // Dirichlet rows use D_n / 2pi, the normalization with unit integral.
  const double scale = kind == KernelKind::dirichlet ? 1.0 / kTwoPi : 1.0;
  SummabilityReport rep;
  for (int n : index) {
    auto k = [kind, n, scale](double t) { return scale * kernel_closed_form(kind, n, t); };
    const int panels = 4 * (2 * n + 2);
    SummabilityRow row;
    row.n = n;
    row.integral = integrate_real(k, -kPi, kPi, {}, panels);
    row.l1 = integrate_abs(k, -kPi, kPi, panels);
    for (double d : deltas) {
      row.tail[d] = d >= kPi ? 0.0 : 2.0 * integrate_abs(k, d, kPi, panels);
    }
    rep.integral_one = rep.integral_one && std::abs(row.integral - 1.0) < 1e-9;
    rep.l1_bound = std::max(rep.l1_bound, row.l1);
    rep.rows.push_back(row);
  }
  if (rep.rows.size() >= 2) {
    const double last = rep.rows.back().l1;
    const double mid = rep.rows[rep.rows.size() / 2].l1;
    rep.l1_bounded = last - mid <= 0.01 * last;
  }
  rep.tail = rep.rows.back().tail;
  return rep;
}

double dirichlet_lebesgue_constant(int n) {
  if (n < 0) throw DomainError("dirichlet_lebesgue_constant: n must be nonnegative");
  // Split at the zeros 2 pi j / (2n + 1) so |D_n| is smooth on each panel.
  std::vector<double> edges{0.0};
  const int m = 2 * n + 1;
  for (int j = 1; 2 * j < m + 1 && kTwoPi * j / m < kPi; ++j) edges.push_back(kTwoPi * j / m);
  edges.push_back(kPi);
  const QuadOptions q{.abs_tol = 1e-13, .rel_tol = 1e-12, .max_intervals = 100000};
  const auto r = integrate(
      [n](double t) { return Complex(std::abs(kernel_closed_form(KernelKind::dirichlet, n, t))); },
      std::span<const double>(edges), q);
  return 2.0 * r.value.real() / kTwoPi;
}

DirichletNorm dirichlet_alexiewicz_norm(int n) {
  if (n < 0) throw DomainError("dirichlet_alexiewicz_norm: n must be nonnegative");
  const Distribution d(Primitive(
      [n](double x) {
        double s = x + kPi;
        for (int k = 1; k <= n; ++k) s += 2.0 * std::sin(k * x) / k;
        return Complex(s);
      },
      true));
  DirichletNorm out;
  out.quadrature = alexiewicz_norm(d);
  if (n == 0) {
    out.closed_form = kTwoPi;
  } else {
    const double m = 2.0 * n + 1.0;
    double s = 2.0 * kTwoPi / m;
    for (int k = 1; k <= n; ++k) s += 4.0 * std::sin(kTwoPi * k / m) / k;
    out.closed_form = s;
  }
  return out;
}

TrigPolynomial cesaro_mean(const FourierCoeffs& c, int n) {
  if (n < 0 || n > c.window()) throw DomainError("cesaro_mean: n outside the coefficient window");
  std::vector<Complex> v(2 * n + 1);
  for (int k = -n; k <= n; ++k) v[k + n] = (1.0 - std::abs(k) / (n + 1.0)) * c[k] / kTwoPi;
  return TrigPolynomial(n, std::move(v));
}

TrigPolynomial cesaro_mean(const Distribution& f, int n, const CoeffOptions& opts) {
  return cesaro_mean(coeffs(f, n, opts), n);
}

TrigPolynomial partial_sum(const FourierCoeffs& c, int n) {
  if (n < 0 || n > c.window()) throw DomainError("partial_sum: n outside the coefficient window");
  std::vector<Complex> v(2 * n + 1);
  for (int k = -n; k <= n; ++k) v[k + n] = c[k] / kTwoPi;
  return TrigPolynomial(n, std::move(v));
}

TrigPolynomial partial_sum(const Distribution& f, int n, const CoeffOptions& opts) {
  return partial_sum(coeffs(f, n, opts), n);
}

double divergence_primitive(int m, double t) {
  const double w = m + 0.5;
  const double left = -m * kPi / w;
  t = reduce(t).angle;
  if (t >= left && t <= 0.0) return -std::sin(w * t);
  return 0.0;
}

Complex divergence_primitive_coeff(int m, int k) {
  const double w = m + 0.5;
  const double len = m * kPi / w;
  auto piece = [len](double lam) {
    const Complex il(0.0, lam);
    return (1.0 - std::exp(-il * len)) / il;
  };
  // -sin(wt) = -(e^{iwt} - e^{-iwt}) / 2i
  return -(piece(w - k) - piece(-w - k)) / Complex(0.0, 2.0);
}

DivergenceReport divergence_construction(int n) {
  if (n < 2) throw DomainError("divergence_construction: n must be at least 2");
  DivergenceReport rep;
  rep.n = n;
  rep.m = 2 * n;
  const int m = rep.m;
  const double left = -m * kPi / (m + 0.5);

  CoeffOptions opts;
  opts.quad.abs_tol = 1e-12;
  const FourierCoeffs c =
      function_coeffs([m](double t) { return Complex(divergence_primitive(m, t)); }, m,
                      {-kPi, left, 0.0, kPi}, opts);
  std::vector<Complex> v = c.values();
  const TrigPolynomial conv(m, std::move(v));  // D_m * F_m = sum F^(k) e^{ikx}

  auto value = [&conv](double x) { return conv(x).real(); };
  const int samples = 16 * (2 * m + 1);
  const double h = kTwoPi / samples;
  double hi = -1e300, lo = 1e300, xhi = 0.0, xlo = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = -kPi + i * h;
    const double y = value(x);
    if (y > hi) hi = y, xhi = x;
    if (y < lo) lo = y, xlo = x;
  }
  constexpr double g = 0.6180339887498949;
  auto polish = [&](double x0, double sign) {
    double a = x0 - h, b = x0 + h;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = sign * value(x1), f2 = sign * value(x2);
    for (int it = 0; it < 50; ++it) {
      if (f1 < f2) {
        a = x1, x1 = x2, f1 = f2, x2 = a + g * (b - a), f2 = sign * value(x2);
      } else {
        b = x2, x2 = x1, f2 = f1, x1 = b - g * (b - a), f1 = sign * value(x1);
      }
    }
    return sign * std::max(f1, f2);
  };
  hi = std::max(hi, polish(xhi, 1.0));
  lo = std::min(lo, polish(xlo, -1.0));
  rep.osc = hi - lo;
  rep.norm = alexiewicz_norm(
      Distribution(Primitive([m](double t) { return Complex(divergence_primitive(m, t)); }, true)));
  rep.ratio = rep.osc / std::log(static_cast<double>(n));
  rep.value_at_pi = value(kPi);
  rep.value_at_zero = value(0.0);
  return rep;
}

}  // namespace torus
