#include "torus/norms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

#include "torus/errors.hpp"

namespace torus {
namespace {

constexpr double kGolden = 0.6180339887498949;

struct Window {
  double osc = -1.0;
  std::size_t lo = 0;  // indices into the two-period sequence
  std::size_t hi = 0;
};

// Largest max - min over windows of N+1 consecutive entries of v (size 2N+1).
Window sliding_oscillation(const std::vector<double>& v, std::size_t n) {
  std::deque<std::size_t> qmax, qmin;
  Window best;
  for (std::size_t j = 0; j < v.size(); ++j) {
    while (!qmax.empty() && v[qmax.back()] <= v[j]) qmax.pop_back();
    qmax.push_back(j);
    while (!qmin.empty() && v[qmin.back()] >= v[j]) qmin.pop_back();
    qmin.push_back(j);
    if (j < n) continue;
    const std::size_t start = j - n;
    while (qmax.front() < start) qmax.pop_front();
    while (qmin.front() < start) qmin.pop_front();
    const double osc = v[qmax.front()] - v[qmin.front()];
    if (osc > best.osc) best = {osc, qmin.front(), qmax.front()};
  }
  return best;
}

// Samples over two periods: z[i] = F(-pi + i*h), i = 0..2N.
std::vector<Complex> two_periods(std::span<const Complex> one) {
  const std::size_t n = one.size() - 1;
  std::vector<Complex> z(2 * n + 1);
  const Complex drift = one[n] - one[0];
  for (std::size_t i = 0; i <= n; ++i) z[i] = one[i] - one[0];
  for (std::size_t i = 1; i <= n; ++i) z[n + i] = z[i] + drift;
  return z;
}

Window projected(const std::vector<Complex>& z, std::size_t n, double theta,
                 std::vector<double>& scratch) {
  const Complex rot = std::polar(1.0, -theta);
  scratch.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) scratch[i] = (rot * z[i]).real();
  return sliding_oscillation(scratch, n);
}

// Best pair on the grid; for complex data the direction of F(beta) - F(alpha)
// is searched over projections Re(e^{-i theta} F).
Window grid_best(const std::vector<Complex>& z, std::size_t n, bool is_real) {
  std::vector<double> scratch;
  if (is_real) return projected(z, n, 0.0, scratch);

  constexpr int kCoarse = 16;
  std::vector<std::pair<double, double>> coarse;
  for (int k = 0; k < kCoarse; ++k) {
    const double th = kPi * k / kCoarse;
    coarse.emplace_back(projected(z, n, th, scratch).osc, th);
  }
  std::sort(coarse.begin(), coarse.end(), std::greater<>());

  Window best;
  auto consider = [&](const Window& w) {
    const double exact = std::abs(z[w.hi] - z[w.lo]);
    if (exact > best.osc) best = {exact, w.lo, w.hi};
  };
  for (int c = 0; c < 3; ++c) {
    double a = coarse[c].second - kPi / kCoarse;
    double b = coarse[c].second + kPi / kCoarse;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    Window w1 = projected(z, n, x1, scratch), w2 = projected(z, n, x2, scratch);
    for (int it = 0; it < 14; ++it) {
      if (w1.osc < w2.osc) {
        a = x1;
        x1 = x2;
        w1 = w2;
        x2 = a + kGolden * (b - a);
        w2 = projected(z, n, x2, scratch);
      } else {
        b = x2;
        x2 = x1;
        w2 = w1;
        x1 = b - kGolden * (b - a);
        w1 = projected(z, n, x1, scratch);
      }
    }
    consider(w1);
    consider(w2);
  }
  return best;
}

// Golden-section maximization of phi on [a, b].
template <class Phi>
std::pair<double, double> golden_max(Phi&& phi, double a, double b, int iters = 40) {
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = phi(x1), f2 = phi(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = phi(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = phi(x1);
    }
  }
  return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

struct Level {
  double value, grid_value, alpha, beta;
};

Level norm_at(const Primitive& F, int n, bool polish) {
  const double h = kTwoPi / n;
  std::vector<Complex> one(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) one[i] = F.local(-kPi + i * h);
  const auto z = two_periods(one);
  const Window w = grid_best(z, static_cast<std::size_t>(n), F.is_real());

  double alpha = -kPi + std::min(w.lo, w.hi) * h;
  double beta = -kPi + std::max(w.lo, w.hi) * h;
  const double grid_value = std::abs(z[w.hi] - z[w.lo]);
  Level out{grid_value, grid_value, alpha, beta};
  if (!polish || grid_value == 0.0) return out;

  auto phi = [&F](double a, double b) { return std::abs(F(b) - F(a)); };
  double best = grid_value;
  for (int round = 0; round < 3; ++round) {
    auto [a, fa] = golden_max([&](double x) { return phi(x, beta); },
                              std::max(alpha - h, beta - kTwoPi), std::min(alpha + h, beta));
    if (fa > best) {
      best = fa;
      alpha = a;
    }
    auto [b, fb] = golden_max([&](double x) { return phi(alpha, x); },
                              std::max(beta - h, alpha), std::min(beta + h, alpha + kTwoPi));
    if (fb > best) {
      best = fb;
      beta = b;
    }
  }
  out.value = best;
  out.alpha = alpha;
  out.beta = beta;
  return out;
}

Level equiv_at(const Primitive& F, int n, bool polish) {
  const double h = kTwoPi / n;
  double best = -1.0, arg = -kPi;
  for (int i = 0; i <= n; ++i) {
    const double x = -kPi + i * h;
    const double v = std::abs(F.local(x));
    if (v > best) {
      best = v;
      arg = x;
    }
  }
  Level out{best, best, arg, arg};
  if (polish && best > 0.0) {
    auto [x, fx] = golden_max([&F](double t) { return std::abs(F.local(t)); },
                              std::max(arg - h, -kPi), std::min(arg + h, kPi));
    if (fx > best) out = {fx, best, x, x};
  }
  return out;
}

template <class LevelFn>
NormEstimate refine(const Primitive& F, const NormOptions& opts, LevelFn&& at) {
  int n = opts.grid > 0 ? opts.grid : F.grid_hint();
  if (n < 2) throw DomainError("alexiewicz_norm: grid must be at least 2");
  Level cur = at(F, n, opts.polish);
  NormEstimate est{cur.value, cur.grid_value, 0.0, n, !opts.refine, cur.alpha, cur.beta};
  if (!opts.refine) return est;
  const int cap = std::max(opts.max_grid, n);
  while (true) {
    if (n >= cap) {
      est.converged = false;
      return est;
    }
    n = std::min(2 * n, cap);
    const Level next = at(F, n, opts.polish);
    const double change = std::abs(next.value - cur.value);
    cur = next;
    est = {cur.value, cur.grid_value, change, n, false, cur.alpha, cur.beta};
    if (change <= opts.rel_tol * std::abs(cur.value) || change <= opts.abs_floor) {
      est.converged = true;
      return est;
    }
  }
}

double strict(const NormEstimate& e, const char* what) {
  if (!e.converged) {
    throw ToleranceError(std::string(what) + ": refinement cap reached", e.value, e.error);
  }
  return e.value;
}

}  // namespace

NormEstimate alexiewicz_norm_estimate(const Distribution& f, const NormOptions& opts) {
  return refine(f.primitive(), opts, norm_at);
}

double alexiewicz_norm(const Distribution& f, const NormOptions& opts) {
  return strict(alexiewicz_norm_estimate(f, opts), "alexiewicz_norm");
}

NormEstimate alexiewicz_norm_equiv_estimate(const Distribution& f, const NormOptions& opts) {
  return refine(f.primitive(), opts, equiv_at);
}

double alexiewicz_norm_equiv(const Distribution& f, const NormOptions& opts) {
  return strict(alexiewicz_norm_equiv_estimate(f, opts), "alexiewicz_norm_equiv");
}

double grid_alexiewicz_norm(std::span<const Complex> samples) {
  if (samples.size() < 2) throw DomainError("grid_alexiewicz_norm: need two samples");
  const auto z = two_periods(samples);
  bool real = true;
  for (const auto& s : samples) real = real && s.imag() == 0.0;
  return std::max(0.0, grid_best(z, samples.size() - 1, real).osc);
}

double modulus_of_continuity(const Distribution& f, double delta, const NormOptions& opts) {
  if (!(delta > 0.0 && delta <= kPi)) {
    throw DomainError("modulus_of_continuity: delta must lie in (0, pi]");
  }
  double best = 0.0;
  for (int k = 1; k <= 24; ++k) {
    for (int j = 0; j < 8; ++j) {
      const double t = kPi * std::ldexp(1.0 + j / 8.0, -k);
      if (t >= delta) continue;
      const Distribution d = f - translate(f, t);
      best = std::max(best, alexiewicz_norm_estimate(d, opts).value);
    }
  }
  return best;
}

}  // namespace torus
