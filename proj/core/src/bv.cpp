#include "torus/bv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "torus/errors.hpp"
#include "torus/norms.hpp"

namespace torus {
namespace {

constexpr double kGolden = 0.6180339887498949;

Complex json_complex(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw DomainError("BVFunction: coefficient must be a number or [re, im]");
}

nlohmann::json to_json_complex(Complex c, bool real) {
  if (real) return c.real();
  return nlohmann::json::array({c.real(), c.imag()});
}

double component(Complex c, int part) { return part == 0 ? c.real() : c.imag(); }

// Real roots of the derivative of one component of a cubic, inside (0, h).
std::vector<double> critical_points(const Cubic& p, int part, double h) {
  const double a = 3.0 * component(p[3], part);
  const double b = 2.0 * component(p[2], part);
  const double c = component(p[1], part);
  std::vector<double> roots;
  auto keep = [&](double s) {
    if (s > 0.0 && s < h) roots.push_back(s);
  };
  const double scale = std::abs(a) * h + std::abs(b);
  if (std::abs(a) * h <= 1e-15 * std::max(scale, std::abs(c) / std::max(h, 1e-300))) {
    if (b != 0.0) keep(-c / b);
  } else {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      if (q != 0.0) {
        keep(q / a);
        keep(c / q);
      } else {
        keep(0.0);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Hermite cell count for max error tol when |f''''| <= m4.
int hermite_cells(double m4, double tol = 1e-10) {
  const double h = std::pow(384.0 * tol / std::max(m4, 1e-300), 0.25);
  return std::max(8, static_cast<int>(std::ceil(kTwoPi / h)));
}

double parse_number(const std::string& text, const std::string& name) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw DomainError("bv_catalog: bad parameter '" + text + "' for " + name);
  }
  return v;
}

}  // namespace

Complex eval_cubic(const Cubic& c, double s) { return c[0] + s * (c[1] + s * (c[2] + s * c[3])); }

Complex eval_cubic_derivative(const Cubic& c, double s) {
  return c[1] + s * (2.0 * c[2] + 3.0 * s * c[3]);
}

BVFunction::BVFunction(std::vector<double> breakpoints, std::vector<Cubic> pieces, double lambda)
    : x_(std::move(breakpoints)), p_(std::move(pieces)), lambda_(lambda) {
  if (x_.empty()) throw DomainError("BVFunction: need at least one breakpoint");
  if (x_.size() != p_.size()) throw DomainError("BVFunction: one piece per breakpoint");
  if (!(lambda_ >= 0.0 && lambda_ <= 1.0)) throw DomainError("BVFunction: lambda outside [0,1]");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || x_[i] < -kPi || x_[i] >= kPi) {
      throw DomainError("BVFunction: breakpoints must lie in [-pi, pi)");
    }
    if (i > 0 && !(x_[i] > x_[i - 1])) throw DomainError("BVFunction: breakpoints not increasing");
  }
  real_ = true;
  for (const auto& p : p_) {
    for (const auto& c : p) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw DomainError("BVFunction: non-finite coefficient");
      }
      real_ = real_ && c.imag() == 0.0;
    }
  }
  len_.resize(x_.size());
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) len_[i] = x_[i + 1] - x_[i];
  len_.back() = x_.front() + kTwoPi - x_.back();
}

BVFunction BVFunction::constant(Complex c) { return BVFunction({-kPi}, {Cubic{c, 0.0, 0.0, 0.0}}); }

BVFunction BVFunction::indicator(double a, double b) {
  if (!(a >= -kPi && a < b && b <= kPi)) throw DomainError("indicator: need -pi <= a < b <= pi");
  if (a == -kPi && b == kPi) return constant(1.0);
  if (b == kPi) return BVFunction({-kPi, a}, {Cubic{0.0}, Cubic{1.0}});
  if (a == -kPi) return BVFunction({-kPi, b}, {Cubic{1.0}, Cubic{0.0}});
  return BVFunction({-kPi, a, b}, {Cubic{0.0}, Cubic{1.0}, Cubic{0.0}});
}

BVFunction BVFunction::piecewise_linear(const std::vector<double>& knots,
                                        const std::vector<Complex>& values) {
  if (knots.size() != values.size() || knots.empty()) {
    throw DomainError("piecewise_linear: knots and values must match");
  }
  std::vector<Cubic> pieces(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const std::size_t j = (i + 1) % knots.size();
    const double h = (j == 0 ? knots[0] + kTwoPi : knots[j]) - knots[i];
    pieces[i] = Cubic{values[i], (values[j] - values[i]) / h, 0.0, 0.0};
  }
  return BVFunction(knots, std::move(pieces));
}

BVFunction BVFunction::hermite(const std::function<Complex(double)>& f,
                               const std::function<Complex(double)>& df, int pieces) {
  if (pieces < 1) throw DomainError("hermite: need at least one piece");
  const double h = kTwoPi / pieces;
  std::vector<double> x(pieces);
  std::vector<Cubic> p(pieces);
  for (int i = 0; i < pieces; ++i) {
    x[i] = -kPi + i * h;
    const double x1 = i + 1 == pieces ? kPi : x[i] + h;
    const Complex f0 = f(x[i]), f1 = f(x1), d0 = df(x[i]), d1 = df(x1);
    const Complex slope = (f1 - f0) / h;
    p[i] = Cubic{f0, d0, (3.0 * slope - 2.0 * d0 - d1) / h, (d0 + d1 - 2.0 * slope) / (h * h)};
  }
  return BVFunction(std::move(x), std::move(p));
}

BVFunction BVFunction::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("BVFunction: JSON object expected");
  for (const char* key : {"breakpoints", "pieces"}) {
    if (!j.contains(key) || !j.at(key).is_array()) {
      throw DomainError(std::string("BVFunction: missing array '") + key + "'");
    }
  }
  std::vector<double> x;
  for (const auto& v : j.at("breakpoints")) {
    if (!v.is_number()) throw DomainError("BVFunction: breakpoints must be numbers");
    x.push_back(v.get<double>());
  }
  std::vector<Cubic> pieces;
  for (const auto& row : j.at("pieces")) {
    if (!row.is_array() || row.empty() || row.size() > 4) {
      throw DomainError("BVFunction: each piece needs 1 to 4 coefficients");
    }
    Cubic c{};
    for (std::size_t k = 0; k < row.size(); ++k) c[k] = json_complex(row[k]);
    pieces.push_back(c);
  }
  const double lambda = j.value("lambda", 0.5);
  BVFunction g(std::move(x), std::move(pieces), lambda);

  // Stated one-sided limits must agree with the pieces.
  auto check = [&](const char* key, auto limit) {
    if (!j.contains(key)) return;
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != g.size()) {
      throw DomainError(std::string("BVFunction: '") + key + "' must have one entry per breakpoint");
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Complex stated = json_complex(arr[i]);
      const Complex derived = limit(i);
      if (std::abs(stated - derived) > 1e-9 * std::max(1.0, std::abs(derived))) {
        throw DomainError(std::string("BVFunction: '") + key + "' disagrees with the pieces at " +
                          std::to_string(i));
      }
    }
  };
  check("left", [&](std::size_t i) { return g.left(i); });
  check("right", [&](std::size_t i) { return g.right(i); });
  return g;
}

nlohmann::json BVFunction::to_json() const {
  nlohmann::json j;
  j["breakpoints"] = x_;
  auto pieces = nlohmann::json::array();
  auto left = nlohmann::json::array();
  auto right = nlohmann::json::array();
  for (std::size_t i = 0; i < size(); ++i) {
    auto row = nlohmann::json::array();
    for (const auto& c : p_[i]) row.push_back(to_json_complex(c, real_));
    pieces.push_back(row);
    left.push_back(to_json_complex(this->left(i), real_));
    right.push_back(to_json_complex(this->right(i), real_));
  }
  j["pieces"] = pieces;
  j["left"] = left;
  j["right"] = right;
  j["lambda"] = lambda_;
  return j;
}

Complex BVFunction::left(std::size_t i) const {
  const std::size_t prev = i == 0 ? size() - 1 : i - 1;
  return eval_cubic(p_[prev], len_[prev]);
}

Complex BVFunction::right(std::size_t i) const { return p_[i][0]; }

BVFunction BVFunction::with_lambda(double lambda) const {
  return BVFunction(x_, p_, lambda);
}

std::pair<std::size_t, double> BVFunction::locate(double t) const {
  const double r = reduce(t).angle;
  const auto idx = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), r) - x_.begin());
  if (idx == 0) return {size() - 1, r + kTwoPi - x_.back()};
  return {idx - 1, r - x_[idx - 1]};
}

Complex BVFunction::operator()(double t) const {
  const auto [i, s] = locate(t);
  if (s == 0.0) return (1.0 - lambda_) * left(i) + lambda_ * right(i);
  return eval_cubic(p_[i], s);
}

Complex BVFunction::right_limit(double t) const {
  const auto [i, s] = locate(t);
  return eval_cubic(p_[i], s);
}

Complex BVFunction::left_limit(double t) const {
  const auto [i, s] = locate(t);
  if (s == 0.0) return left(i);
  return eval_cubic(p_[i], s);
}

BVFunction BVFunction::dilate(int n) const {
  if (n < 1) throw DomainError("dilate: factor must be positive");
  if (n == 1) return *this;
  struct Item {
    double start;
    Cubic piece;
  };
  std::vector<Item> items;
  items.reserve(size() * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < size(); ++i) {
    Cubic c = p_[i];
    double scale = 1.0;
    for (auto& ck : c) {
      ck *= scale;
      scale *= n;
    }
    for (int m = 0; m < n; ++m) {
      items.push_back({reduce((x_[i] + kTwoPi * m) / n).angle, c});
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.start < b.start; });
  std::vector<double> x;
  std::vector<Cubic> p;
  for (const auto& it : items) {
    if (!x.empty() && it.start <= x.back()) continue;
    x.push_back(it.start);
    p.push_back(it.piece);
  }
  return BVFunction(std::move(x), std::move(p), lambda_);
}

Complex BVFunction::fourier(int n) const {
  Complex total{};
  for (std::size_t i = 0; i < size(); ++i) {
    const double h = len_[i];
    std::array<Complex, 4> m{};
    if (n == 0) {
      for (int k = 0; k < 4; ++k) m[k] = std::pow(h, k + 1) / (k + 1);
    } else if (std::abs(n * h) <= 1.0) {
      const Complex w(0.0, -static_cast<double>(n) * h);
      for (int k = 0; k < 4; ++k) {
        // int_0^h s^k e^{-ins} ds = h^{k+1} sum_j (-inh)^j / (j! (k+j+1))
        Complex term = 1.0, sum{};
        for (int j = 0; j < 40; ++j) {
          const Complex add = term / static_cast<double>(k + j + 1);
          sum += add;
          if (std::abs(add) < 1e-18) break;
          term *= w / static_cast<double>(j + 1);
        }
        m[k] = std::pow(h, k + 1) * sum;
      }
    } else {
      const Complex in(0.0, static_cast<double>(n));
      const Complex e = std::polar(1.0, -n * h);
      m[0] = (1.0 - e) / in;
      for (int k = 1; k < 4; ++k) m[k] = -std::pow(h, k) * e / in + static_cast<double>(k) / in * m[k - 1];
    }
    Complex piece{};
    for (int k = 0; k < 4; ++k) piece += p_[i][k] * m[k];
    total += std::polar(1.0, -n * x_[i]) * piece;
  }
  return total;
}

BVFunction operator+(const BVFunction& a, const BVFunction& b) {
  std::vector<double> x;
  std::merge(a.x_.begin(), a.x_.end(), b.x_.begin(), b.x_.end(), std::back_inserter(x));
  x.erase(std::unique(x.begin(), x.end()), x.end());
  auto shifted = [](const BVFunction& g, double u) {
    const auto [i, s] = g.locate(u);
    const Cubic& c = g.p_[i];
    // Taylor shift: coefficients of c(s + t) in t.
    return Cubic{eval_cubic(c, s), c[1] + s * (2.0 * c[2] + 3.0 * s * c[3]), c[2] + 3.0 * s * c[3],
                 c[3]};
  };
  std::vector<Cubic> p(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Cubic ca = shifted(a, x[k]), cb = shifted(b, x[k]);
    for (int j = 0; j < 4; ++j) p[k][j] = ca[j] + cb[j];
  }
  return BVFunction(std::move(x), std::move(p), a.lambda_);
}

BVFunction operator*(Complex c, const BVFunction& g) {
  std::vector<Cubic> p = g.p_;
  for (auto& piece : p) {
    for (auto& ck : piece) ck *= c;
  }
  return BVFunction(g.x_, std::move(p), g.lambda_);
}

VariationReport variation(const BVFunction& g) {
  double v = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Cubic& p = g.piece(i);
    const double h = g.length(i);
    if (g.is_real()) {
      double prev = p[0].real();
      for (double s : critical_points(p, 0, h)) {
        const double cur = eval_cubic(p, s).real();
        v += std::abs(cur - prev);
        prev = cur;
      }
      v += std::abs(eval_cubic(p, h).real() - prev);
    } else if (p[1] != Complex{} || p[2] != Complex{} || p[3] != Complex{}) {
      // Arc length of the complex cubic; |p'| is smooth away from its zeros.
      std::vector<double> edges{0.0};
      for (int part = 0; part < 2; ++part) {
        for (double s : critical_points(p, part, h)) edges.push_back(s);
      }
      edges.push_back(h);
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      v += integrate([&p](double s) { return Complex(std::abs(eval_cubic_derivative(p, s))); }, edges,
                     {.abs_tol = 1e-14, .rel_tol = 1e-13, .max_intervals = 2000})
               .value.real();
    }
    v += std::abs(g.right(i) - g.left(i));
  }
  VariationReport r;
  r.variation = v;

  double sup = 0.0, inf = std::numeric_limits<double>::infinity();
  auto see = [&](Complex z) {
    sup = std::max(sup, std::abs(z));
    inf = std::min(inf, std::abs(z));
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Cubic& p = g.piece(i);
    const double h = g.length(i);
    see(g.left(i));
    see(g.right(i));
    see((1.0 - g.lambda()) * g.left(i) + g.lambda() * g.right(i));
    if (g.is_real()) {
      double prev = p[0].real();
      for (double s : critical_points(p, 0, h)) {
        const double cur = eval_cubic(p, s).real();
        see(cur);
        if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) inf = 0.0;
        prev = cur;
      }
      const double end = eval_cubic(p, h).real();
      if ((prev < 0.0 && end > 0.0) || (prev > 0.0 && end < 0.0)) inf = 0.0;
    } else {
      // |p|^2 has degree six: sample densely, then polish the extremes.
      constexpr int kSamples = 64;
      int imax = 0, imin = 0;
      double vmax = -1.0, vmin = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= kSamples; ++k) {
        const double a = std::abs(eval_cubic(p, h * k / kSamples));
        if (a > vmax) vmax = a, imax = k;
        if (a < vmin) vmin = a, imin = k;
      }
      auto polish = [&](int k, double sign) {
        double a = h * std::max(k - 1, 0) / kSamples, b = h * std::min(k + 1, kSamples) / kSamples;
        auto phi = [&](double s) { return sign * std::abs(eval_cubic(p, s)); };
        double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
        double f1 = phi(x1), f2 = phi(x2);
        for (int it = 0; it < 60; ++it) {
          if (f1 < f2) {
            a = x1, x1 = x2, f1 = f2, x2 = a + kGolden * (b - a), f2 = phi(x2);
          } else {
            b = x2, x2 = x1, f2 = f1, x1 = b - kGolden * (b - a), f1 = phi(x1);
          }
        }
        see(eval_cubic(p, 0.5 * (x1 + x2)));
      };
      polish(imax, 1.0);
      polish(imin, -1.0);
    }
  }
  r.sup_norm = sup;
  r.inf_abs = inf;
  r.bv_norm = r.sup_norm + r.variation;
  return r;
}

Complex stieltjes(const std::function<Complex(double)>& F, const BVFunction& g, double a,
                  double b, const QuadOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("stieltjes: non-finite limit");
  if (b < a || b - a > kTwoPi * (1.0 + 1e-14)) {
    throw DomainError("stieltjes: need 0 <= b - a <= 2pi");
  }
  if (a == b) return {};

  // Breakpoint positions in (a, b] across period copies.
  struct Mark {
    double pos;
    std::size_t i;
  };
  std::vector<Mark> marks;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double base = g.breakpoint(i);
    const double m0 = std::floor((a - base) / kTwoPi);
    for (int dm = 0; dm <= 2; ++dm) {
      const double pos = base + kTwoPi * (m0 + dm);
      if (pos > a && pos <= b) marks.push_back({pos, i});
    }
  }
  std::sort(marks.begin(), marks.end(), [](const Mark& l, const Mark& r) { return l.pos < r.pos; });

  Complex total{};
  for (const auto& mk : marks) {
    const Complex jump = g.right(mk.i) - g.left(mk.i);
    if (jump != Complex{}) total += F(mk.pos) * jump;
  }

  auto smooth = [&](double lo, double hi) {
    if (!(hi > lo)) return;
    const double mid = 0.5 * (lo + hi);
    const auto [i, smid] = g.locate(mid);
    const Cubic& p = g.piece(i);
    if (p[1] == Complex{} && p[2] == Complex{} && p[3] == Complex{}) return;
    const double s_lo = smid - (mid - lo);
    auto integrand = [&](double t) { return F(t) * eval_cubic_derivative(p, s_lo + (t - lo)); };
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / (kPi / 8))));
    total += integrate(integrand, lo, hi, opts, panels).value;
  };
  double lo = a;
  for (const auto& mk : marks) {
    smooth(lo, mk.pos);
    lo = mk.pos;
  }
  smooth(lo, b);
  return total;
}

Complex stieltjes(const Primitive& F, const BVFunction& g, double a, double b,
                  const QuadOptions& opts) {
  return stieltjes([&F](double x) { return F(x); }, g, a, b, opts);
}

Distribution multiply_bv(const Distribution& f, const BVFunction& g, const QuadOptions& opts) {
  const Primitive F = f.primitive();
  // Knots carry the running Stieltjes integral so each evaluation only
  // integrates over a short tail.
  std::vector<double> knots;
  for (int k = 0; k <= 32; ++k) knots.push_back(-kPi + kTwoPi * k / 32);
  for (std::size_t i = 0; i < g.size(); ++i) knots.push_back(g.breakpoint(i));
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  knots.back() = kPi;
  std::vector<Complex> cumulative(knots.size());
  for (std::size_t k = 1; k < knots.size(); ++k) {
    cumulative[k] = cumulative[k - 1] + stieltjes(F, g, knots[k - 1], knots[k], opts);
  }
  auto data = std::make_shared<const std::pair<std::vector<double>, std::vector<Complex>>>(
      std::move(knots), std::move(cumulative));
  return Distribution(Primitive(
      [F, g, data, opts](double x) -> Complex {
        if (x <= -kPi) return {};
        const auto& [kn, cum] = *data;
        const auto idx = static_cast<std::size_t>(
            std::upper_bound(kn.begin(), kn.end(), x) - kn.begin() - 1);
        const std::size_t k = std::min(idx, kn.size() - 1);
        const Complex tail = kn[k] == x ? Complex{} : stieltjes(F, g, kn[k], x, opts);
        return F(x) * g.right_limit(x) - (cum[k] + tail);
      },
      F.is_real() && g.is_real(), F.grid_hint()));
}

Complex integrate_product(const Distribution& f, const BVFunction& g, const QuadOptions& opts) {
  const Primitive& F = f.primitive();
  return F.drift() * g.right_limit(-kPi) - stieltjes(F, g, -kPi, kPi, opts);
}

HolderReport holder_check(const Distribution& f, const BVFunction& g, double tol) {
  const VariationReport vr = variation(g);
  const double norm = alexiewicz_norm_estimate(f).value;
  HolderReport r;
  r.lhs = std::abs(integrate_product(f, g));
  r.mid = std::abs(f.drift()) * vr.inf_abs + norm * vr.variation;
  r.rhs = norm * vr.bv_norm;
  r.holds = r.lhs <= r.mid + tol * std::max(1.0, r.mid) && r.mid <= r.rhs + tol * std::max(1.0, r.rhs);
  return r;
}

BVFunction bv_catalog(const std::string& full) {
  const auto colon = full.find(':');
  const std::string name = full.substr(0, colon);
  const bool has_param = colon != std::string::npos;
  const std::string param = has_param ? full.substr(colon + 1) : std::string();
  auto no_param = [&] {
    if (has_param) throw DomainError("bv_catalog: '" + name + "' takes no parameter");
  };
  if (name == "indicator") {
    no_param();
    return BVFunction::indicator(0.0, kPi);
  }
  if (name == "const") {
    return BVFunction::constant(has_param ? parse_number(param, name) : 1.0);
  }
  if (name == "sin") {
    no_param();
    return BVFunction::hermite([](double t) { return Complex(std::sin(t)); },
                               [](double t) { return Complex(std::cos(t)); }, hermite_cells(1.0));
  }
  if (name == "cos") {
    const double kd = has_param ? parse_number(param, name) : 1.0;
    if (kd != std::round(kd) || kd < 0.0 || kd > 64.0) {
      throw DomainError("bv_catalog: cos frequency must be an integer in [0, 64]");
    }
    const double k = kd;
    if (k == 0.0) return BVFunction::constant(1.0);
    return BVFunction::hermite([k](double t) { return Complex(std::cos(k * t)); },
                               [k](double t) { return Complex(-k * std::sin(k * t)); },
                               hermite_cells(k * k * k * k));
  }
  if (name == "tent") {
    no_param();
    return BVFunction::piecewise_linear({-kPi, 0.0}, {0.0, 1.0});
  }
  if (name == "one-plus-cos") {
    no_param();
    return BVFunction::hermite([](double t) { return Complex(1.0 + std::cos(t)); },
                               [](double t) { return Complex(-std::sin(t)); }, hermite_cells(1.0));
  }
  throw LookupError("bv_catalog: unknown multiplier '" + full + "'");
}

std::vector<std::string> bv_test_set() {
  return {"indicator", "const:1", "sin", "cos:2", "tent", "one-plus-cos"};
}

}  // namespace torus
