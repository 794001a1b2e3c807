#include "torus/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "torus/errors.hpp"

namespace torus {
namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights for the odd-indexed Kronrod nodes.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Cheap magnitude for error bookkeeping; within a factor sqrt(2) of |z|.
double mag(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// QUADPACK-style error from the Kronrod/Gauss difference, scaled by the
// integrand's own variation on the panel.
double scaled_error(double diff, double resabs, double resasc) {
  double err = diff;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double kEpsMach = 2.220446049250313e-16;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEpsMach)) {
    err = std::max(50.0 * kEpsMach * resabs, err);
  }
  return err;
}

struct Panel {
  double a, b;
  std::vector<Complex> value;
  double error;
};

struct PanelOrder {
  bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

class Kronrod {
 public:
  Kronrod(const VectorIntegrand& f, std::size_t dim) : f_(f), dim_(dim), vals_(15 * dim) {}

  Panel eval(double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // node ordering: 0..6 left (x = c - h*xgk[j]), 7..13 right, 14 center
    for (int j = 0; j < 7; ++j) {
      f_(center - half * kXgk[j], std::span<Complex>(&vals_[j * dim_], dim_));
      f_(center + half * kXgk[j], std::span<Complex>(&vals_[(7 + j) * dim_], dim_));
    }
    f_(center, std::span<Complex>(&vals_[14 * dim_], dim_));
    evaluations_ += 15;

    Panel p{a, b, std::vector<Complex>(dim_), 0.0};
    const double abs_half = std::abs(half);
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex fc = vals_[14 * dim_ + k];
      Complex resk = fc * kWgk[7];
      Complex resg = fc * kWg[3];
      double resabs = mag(fc) * kWgk[7];
      for (int j = 0; j < 7; ++j) {
        const Complex l = vals_[j * dim_ + k];
        const Complex r = vals_[(7 + j) * dim_ + k];
        resk += kWgk[j] * (l + r);
        resabs += kWgk[j] * (mag(l) + mag(r));
        if (j % 2 == 1) resg += kWg[j / 2] * (l + r);
      }
      const Complex mean = resk * 0.5;
      double resasc = kWgk[7] * mag(fc - mean);
      for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (mag(vals_[j * dim_ + k] - mean) +
                             mag(vals_[(7 + j) * dim_ + k] - mean));
      }
      p.value[k] = resk * half;
      const double err = scaled_error(mag((resk - resg) * half), resabs * abs_half,
                                      resasc * abs_half);
      p.error = std::max(p.error, err);
    }
    return p;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  const VectorIntegrand& f_;
  std::size_t dim_;
  std::vector<Complex> vals_;
  std::size_t evaluations_ = 0;
};

}  // namespace

std::vector<double> uniform_edges(double a, double b, int panels) {
  if (panels < 1) throw DomainError("uniform_edges: need at least one panel");
  std::vector<double> e(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) e[i] = a + (b - a) * static_cast<double>(i) / panels;
  e.back() = b;
  return e;
}

QuadResult<std::vector<Complex>> integrate_vector(const VectorIntegrand& f, std::size_t dim,
                                                  std::span<const double> edges,
                                                  const QuadOptions& opts) {
  if (edges.size() < 2) throw DomainError("integrate: need at least two edges");
  if (dim == 0) throw DomainError("integrate: zero-dimensional integrand");
  for (double e : edges) {
    if (!std::isfinite(e)) throw DomainError("integrate: non-finite limit");
  }

  Kronrod rule(f, dim);
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  std::vector<Complex> total(dim);
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] == edges[i]) continue;
    Panel p = rule.eval(edges[i], edges[i + 1]);
    for (std::size_t k = 0; k < dim; ++k) total[k] += p.value[k];
    total_err += p.error;
    heap.push(std::move(p));
  }

  auto tolerance = [&] {
    double scale = 0.0;
    for (const auto& v : total) scale = std::max(scale, std::abs(v));
    return std::max(opts.abs_tol, opts.rel_tol * scale);
  };

  const std::size_t budget = std::max<std::size_t>(opts.max_intervals, heap.size());
  while (!heap.empty() && total_err > tolerance() && heap.size() < budget) {
    // top() is const; the panel is popped right away, so moving from it is safe.
    Panel worst = std::move(const_cast<Panel&>(heap.top()));
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Cannot bisect further in double precision; keep it and stop refining.
      heap.push(std::move(worst));
      break;
    }
    Panel left = rule.eval(worst.a, mid);
    Panel right = rule.eval(mid, worst.b);
    for (std::size_t k = 0; k < dim; ++k) {
      total[k] += left.value[k] + right.value[k] - worst.value[k];
    }
    total_err += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }

  // Re-sum from the panels to shed the drift of incremental updates.
  std::vector<Complex> sum(dim);
  double err = 0.0;
  while (!heap.empty()) {
    const Panel& p = heap.top();
    for (std::size_t k = 0; k < dim; ++k) sum[k] += p.value[k];
    err += p.error;
    heap.pop();
  }
  QuadResult<std::vector<Complex>> out;
  out.value = std::move(sum);
  out.error = err;
  out.evaluations = rule.evaluations();
  out.converged = err <= tolerance();
  return out;
}

QuadResult<Complex> integrate(const ScalarIntegrand& f, std::span<const double> edges,
                              const QuadOptions& opts) {
  VectorIntegrand vf = [&f](double x, std::span<Complex> out) { out[0] = f(x); };
  auto r = integrate_vector(vf, 1, edges, opts);
  return {r.value[0], r.error, r.evaluations, r.converged};
}

QuadResult<Complex> integrate(const ScalarIntegrand& f, double a, double b,
                              const QuadOptions& opts, int initial_panels) {
  const auto edges = uniform_edges(a, b, initial_panels);
  return integrate(f, std::span<const double>(edges), opts);
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadOptions& opts, int initial_panels) {
  ScalarIntegrand g = [&f](double x) { return Complex(f(x), 0.0); };
  return integrate(g, a, b, opts, initial_panels).value.real();
}

}  // namespace torus
