#include "torus/convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

#include "torus/catalog.hpp"
#include "torus/errors.hpp"
#include "torus/fourier.hpp"
#include "torus/norms.hpp"

namespace torus {
namespace {

constexpr std::array<double, 10> kGLx = {
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244, -0.4333953941292472,
    -0.1488743389816312, 0.1488743389816312,  0.4333953941292472,  0.6794095682990244,
    0.8650633666889845,  0.9739065285171717};
constexpr std::array<double, 10> kGLw = {
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820, 0.2692667193099963,
    0.2955242247147529, 0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
    0.1494513491505806, 0.0666713443086881};

// FFTW planning is not thread safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Circular convolution of two length-M sequences.
std::vector<Complex> circular_convolve(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const int m = static_cast<int>(a.size());
  auto* buf_a = fftw_alloc_complex(m);
  auto* buf_b = fftw_alloc_complex(m);
  fftw_plan fa, fb, inv;
  {
    std::lock_guard lock(planner_mutex());
    fa = fftw_plan_dft_1d(m, buf_a, buf_a, FFTW_FORWARD, FFTW_ESTIMATE);
    fb = fftw_plan_dft_1d(m, buf_b, buf_b, FFTW_FORWARD, FFTW_ESTIMATE);
    inv = fftw_plan_dft_1d(m, buf_a, buf_a, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (int i = 0; i < m; ++i) {
    buf_a[i][0] = a[i].real();
    buf_a[i][1] = a[i].imag();
    buf_b[i][0] = b[i].real();
    buf_b[i][1] = b[i].imag();
  }
  fftw_execute(fa);
  fftw_execute(fb);
  for (int i = 0; i < m; ++i) {
    const Complex p = Complex(buf_a[i][0], buf_a[i][1]) * Complex(buf_b[i][0], buf_b[i][1]);
    buf_a[i][0] = p.real();
    buf_a[i][1] = p.imag();
  }
  fftw_execute(inv);
  std::vector<Complex> out(m);
  for (int i = 0; i < m; ++i) out[i] = Complex(buf_a[i][0], buf_a[i][1]) / static_cast<double>(m);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fa);
    fftw_destroy_plan(fb);
    fftw_destroy_plan(inv);
  }
  fftw_free(buf_a);
  fftw_free(buf_b);
  return out;
}

// Integrals of g over the 2^k dyadic cells of [-pi, pi), split at g's edges.
std::vector<Complex> cell_integrals(const L1Function& g, int k) {
  const int cells = 1 << k;
  const double w = kTwoPi / cells;
  std::vector<Complex> out(cells);
  const QuadOptions q{.abs_tol = 1e-15, .rel_tol = 1e-12, .max_intervals = 4000};
  for (int j = 0; j < cells; ++j) {
    const double lo = -kPi + j * w;
    const double hi = j + 1 == cells ? kPi : lo + w;
    std::vector<double> e{lo};
    for (double x : g.edges) {
      if (x > lo && x < hi) e.push_back(x);
    }
    e.push_back(hi);
    std::sort(e.begin(), e.end());
    out[j] = integrate(g.eval, std::span<const double>(e), q).value;
  }
  return out;
}

// Running integral of F on the uniform M-cell grid, i = 0..M.
std::vector<Complex> antiderivative_grid(const Primitive& F, int m) {
  const double h = kTwoPi / m;
  std::vector<Complex> out(static_cast<std::size_t>(m) + 1);
  const QuadOptions q{.abs_tol = 1e-15, .rel_tol = 1e-13, .max_intervals = 64};
  auto f = [&F](double x) { return F.local(x); };
  for (int i = 0; i < m; ++i) {
    const double lo = -kPi + i * h;
    const double hi = i + 1 == m ? kPi : lo + h;
    out[i + 1] = out[i] + integrate(f, lo, hi, q).value;
  }
  return out;
}

// Primitive samples of f * g_k on the M grid (M a multiple of 2^k), from
// cell integrals of g. The antiderivative of F splits into a quadratic part
// plus a periodic part; only the periodic part needs a circular convolution.
std::vector<Complex> step_convolution(const Primitive& F, const std::vector<Complex>& antider,
                                      const std::vector<Complex>& integrals) {
  const int m = static_cast<int>(antider.size()) - 1;
  const int cells = static_cast<int>(integrals.size());
  const int r = m / cells;
  const double h = kTwoPi / m;
  const double w = kTwoPi / cells;
  const Complex d = F.drift();
  const Complex A = antider[m];

  std::vector<Complex> per(m);
  for (int l = 0; l < m; ++l) {
    const double x = -kPi + l * h;
    per[l] = antider[l] - (d * x * x / (2.0 * kTwoPi) + A * x / kTwoPi);
  }
  std::vector<Complex> psi(m), up(m);
  for (int i = 0; i < m; ++i) {
    const int l = (i + m / 2) % m;
    psi[i] = per[l] - per[((l - r) % m + m) % m];
  }
  Complex mass{};
  for (int j = 0; j < cells; ++j) {
    up[static_cast<std::size_t>(j) * r] = integrals[j] / w;
    mass += integrals[j];
  }
  const auto s = circular_convolve(up, psi);
  std::vector<Complex> out(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    out[i] = s[i % m] - s[0] + (i * h) * d * mass / kTwoPi;
  }
  return out;
}

// Running moments M_k(z) = int_{-2pi}^{z} F(u) u^k du, k = 0..2, of the
// extended primitive on [-2pi, 2pi]: a table at uniform knots plus a short
// adaptive integral from the nearest knot. Rough primitives are resolved
// once here instead of at every evaluation of the convolution.
class MomentTable {
 public:
  static constexpr int kCells = 1 << 14;

  // Lookups integrate at most one cell, so a small panel budget suffices even
  // where F oscillates without bound.
  MomentTable(const Primitive& F, const QuadOptions& opts)
      : F_(F), opts_{opts.abs_tol, opts.rel_tol, std::min<std::size_t>(opts.max_intervals, 64)}, lo_(-2.0 * kTwoPi / 2.0), w_(2.0 * kTwoPi / kCells),
        table_(static_cast<std::size_t>(kCells) + 1) {
    const QuadOptions q{.abs_tol = 1e-15, .rel_tol = 1e-13, .max_intervals = 400};
    for (int j = 0; j < kCells; ++j) {
      const double a = lo_ + j * w_;
      table_[j + 1] = add(table_[j], cell(a, a + w_, q));
    }
  }

  std::array<Complex, 3> at(double z) const {
    const double u = (z - lo_) / w_;
    const int j = std::clamp(static_cast<int>(std::floor(u)), 0, kCells - 1);
    const double knot = lo_ + j * w_;
    if (z == knot) return table_[j];
    return add(table_[j], cell(knot, z, opts_));
  }

 private:
  static std::array<Complex, 3> add(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }

  std::array<Complex, 3> cell(double a, double b, const QuadOptions& q) const {
    if (a == b) return {};
    const std::array<double, 2> e{std::min(a, b), std::max(a, b)};
    VectorIntegrand f = [this](double u, std::span<Complex> out) {
      const Complex v = F_(u);
      out[0] = v;
      out[1] = v * u;
      out[2] = v * u * u;
    };
    auto r = integrate_vector(f, 3, std::span<const double>(e), q).value;
    const double sign = b >= a ? 1.0 : -1.0;
    return {sign * r[0], sign * r[1], sign * r[2]};
  }

  Primitive F_;
  QuadOptions opts_;
  double lo_, w_;
  std::vector<std::array<Complex, 3>> table_;
};

}  // namespace

PeriodicFunction::PeriodicFunction(Fn f, bool is_real)
    : f_(std::make_shared<const Fn>(std::move(f))), real_(is_real) {}

Complex PeriodicFunction::operator()(double x) const {
  Complex v = (*f_)(reduce(x).angle);
  if (real_) v.imag(0.0);
  return v;
}

std::vector<Complex> PeriodicFunction::sample(int n) const {
  if (n < 1) throw DomainError("PeriodicFunction::sample: n must be positive");
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = (*this)(-kPi + kTwoPi * i / n);
  return out;
}

Distribution PeriodicFunction::running_integral(int n) const {
  if (n < 1) throw DomainError("running_integral: n must be positive");
  const double h = kTwoPi / n;
  std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    const double c = -kPi + (i + 0.5) * h;
    Complex s{};
    for (std::size_t k = 0; k < kGLx.size(); ++k) s += kGLw[k] * (*this)(c + 0.5 * h * kGLx[k]);
    v[i + 1] = v[i] + 0.5 * h * s;
  }
  return Distribution(Primitive::from_samples(std::move(v), real_));
}

PeriodicFunction convolve_bv(const Distribution& f, const BVFunction& g, const QuadOptions& opts) {
  const Primitive F = f.primitive();
  const Complex base = g.right_limit(-kPi) * F.drift();
  auto table = std::make_shared<const MomentTable>(F, opts);
  return PeriodicFunction(
      [F, g, base, table](double x) {
        Complex total = base;
        // Jumps at breakpoints in (-pi, pi]; a breakpoint at -pi counts at pi.
        for (std::size_t i = 0; i < g.size(); ++i) {
          const Complex jump = g.right(i) - g.left(i);
          if (std::abs(jump) <= 1e-12 * (1.0 + std::abs(g.left(i)))) continue;
          const double pos = g.breakpoint(i) == -kPi ? kPi : g.breakpoint(i);
          total += F(x - pos) * jump;
        }
        // Smooth parts: int F(x - y) p'(y - x_i) dy as moments of F.
        for (std::size_t i = 0; i < g.size(); ++i) {
          const Cubic& p = g.piece(i);
          if (p[1] == Complex{} && p[2] == Complex{} && p[3] == Complex{}) continue;
          const double start = g.breakpoint(i);
          const double end = start + g.length(i);
          auto segment = [&](double y0, double y1) {
            if (!(y1 > y0)) return;
            const double sigma = x - start;
            const std::array<Complex, 3> beta{
                p[1] + 2.0 * p[2] * sigma + 3.0 * p[3] * sigma * sigma,
                -2.0 * p[2] - 6.0 * p[3] * sigma, 3.0 * p[3]};
            const auto hi = table->at(x - y0);
            const auto lo = table->at(x - y1);
            for (int k = 0; k < 3; ++k) total += beta[k] * (hi[k] - lo[k]);
          };
          if (end <= kPi) {
            segment(start, end);
          } else {
            // The wrapping piece: [start, pi] and its continuation past -pi.
            segment(start, kPi);
            const double shift = kTwoPi;
            const double y0 = -kPi, y1 = end - shift;
            if (y1 > y0) {
              const double sigma = x - (start - shift);
              const std::array<Complex, 3> beta{
                  p[1] + 2.0 * p[2] * sigma + 3.0 * p[3] * sigma * sigma,
                  -2.0 * p[2] - 6.0 * p[3] * sigma, 3.0 * p[3]};
              const auto hi = table->at(x - y0);
              const auto lo = table->at(x - y1);
              for (int k = 0; k < 3; ++k) total += beta[k] * (hi[k] - lo[k]);
            }
          }
        }
        return total;
      },
      F.is_real() && g.is_real());
}

double l1_norm(const L1Function& g) {
  std::vector<double> e{-kPi, kPi};
  for (double x : g.edges) {
    if (x > -kPi && x < kPi) e.push_back(x);
  }
  std::sort(e.begin(), e.end());
  const QuadOptions q{.abs_tol = 1e-12, .rel_tol = 1e-10, .max_intervals = 100000};
  const auto r = integrate([&g](double t) { return Complex(std::abs(g.eval(t))); },
                           std::span<const double>(e), q);
  if (!r.converged) throw DomainError("l1_norm: integrand does not look integrable");
  return r.value.real();
}

L1Convolution convolve_l1(const Distribution& f, const L1Function& g, double tol, int max_depth,
                          int start_depth) {
  if (!(tol > 0.0)) throw DomainError("convolve_l1: tol must be positive");
  if (start_depth < 1 || max_depth < start_depth + 1 || max_depth > 20) {
    throw DomainError("convolve_l1: need 1 <= start_depth < max_depth <= 20");
  }
  l1_norm(g);
  const Primitive& F = f.primitive();
  const bool real = F.is_real();

  L1Convolution out;
  int grid = 0;
  std::vector<Complex> antider;
  for (int k = start_depth; k + 1 <= max_depth; ++k) {
    const auto fine = cell_integrals(g, k + 1);
    std::vector<Complex> coarse(fine.size() / 2);
    for (std::size_t j = 0; j < coarse.size(); ++j) coarse[j] = fine[2 * j] + fine[2 * j + 1];

    const int m = std::max(1 << 12, 1 << (k + 1));
    if (m != grid) {
      antider = antiderivative_grid(F, m);
      grid = m;
    }
    const auto pk = step_convolution(F, antider, coarse);
    auto pk1 = step_convolution(F, antider, fine);
    std::vector<Complex> diff(pk.size());
    for (std::size_t i = 0; i < pk.size(); ++i) diff[i] = pk1[i] - pk[i];
    const double d = grid_alexiewicz_norm(diff);
    out.differences.push_back(d);
    if (d < tol) {
      if (real) {
        for (auto& v : pk1) v.imag(0.0);
      }
      out.result = Distribution(Primitive::from_samples(std::move(pk1), real));
      out.depth = k + 1;
      out.grid = m;
      return out;
    }
  }
  throw ConvergenceError("convolve_l1: no Cauchy behaviour by depth " + std::to_string(max_depth),
                         out.differences);
}

ConvolutionTheoremReport convolution_theorem_check(const Distribution& f, const BVFunction& g,
                                                   int N, double tol) {
  if (N < 0) throw DomainError("convolution_theorem_check: negative window");
  const PeriodicFunction h = convolve_bv(f, g);
  CoeffOptions opts;
  opts.quad.abs_tol = 1e-9;
  opts.quad.max_intervals = 3000;
  opts.panels_per_mode = 16;
  std::vector<double> edges{-kPi};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.breakpoint(i) > -kPi) edges.push_back(g.breakpoint(i));
  }
  edges.push_back(0.0);
  edges.push_back(kPi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() > 64) edges = {-kPi, 0.0, kPi};
  const FourierCoeffs lhs = function_coeffs([&h](double x) { return h(x); }, N, edges, opts);
  const FourierCoeffs fc = coeffs(f, N);

  ConvolutionTheoremReport rep;
  for (int n = -N; n <= N; ++n) {
    ConvolutionTheoremRow row{n, lhs[n], fc[n] * g.fourier(n), 0.0};
    row.gap = std::abs(row.lhs - row.rhs);
    rep.max_gap = std::max(rep.max_gap, row.gap);
    rep.rows.push_back(row);
  }
  rep.ok = rep.max_gap < tol;
  return rep;
}

std::vector<BilinearRow> bilinear_unboundedness_demo(const std::vector<int>& ns) {
  std::vector<BilinearRow> rows;
  const double x0 = std::pow(kPi, -4.0);
  const QuadOptions q{.abs_tol = 1e-12, .rel_tol = 1e-10, .max_intervals = 200000};
  for (int n : ns) {
    if (n < 1) throw DomainError("bilinear_unboundedness_demo: n must be positive");
    BilinearRow row;
    row.n = n;
    const double top = n * kPi;
    row.cut = std::pow(top, -0.25);
    const double cut = row.cut;
    // f - f_n is f restricted to (0, cut); its primitive freezes past cut.
    const Distribution tail(Primitive(
        [cut](double x) { return Complex(x > 0.0 ? example36_primitive(std::min(x, cut)) : 0.0); },
        true));
    row.distance = alexiewicz_norm_estimate(tail).value;
    row.distance_bound = std::pow(top, -0.5);

    const int panels = std::max(4, static_cast<int>(std::ceil((top - x0) / (kPi / 4))));
    row.lower = 0.25 * integrate_real(
                           [](double x) {
                             const double s = std::sin(x);
                             return std::pow(x, -0.75) * s * s;
                           },
                           x0, top, q, panels);

    // Same integral in the original variable; mesh at quarter turns of t^-4.
    std::vector<double> edges;
    for (int k = 0; k <= panels; ++k) {
      const double x = top - (top - x0) * k / panels;
      edges.push_back(std::pow(x, -0.25));
    }
    edges.front() = cut;
    edges.back() = kPi;
    row.lower_direct = integrate(
                           [](double t) {
                             const double s = std::sin(std::pow(t, -4.0));
                             return Complex(s * s / (t * t));
                           },
                           std::span<const double>(edges), q)
                           .value.real();
    row.ratio = row.lower / std::pow(static_cast<double>(n), 0.25);
    row.ratio_target = 0.5 * std::pow(kPi, 0.25);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace torus
