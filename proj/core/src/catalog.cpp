#include "torus/catalog.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <algorithm>

#include "torus/errors.hpp"

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

double inner_integrand(double t) { return t * std::cos(std::pow(t, -4.0)); }

double gl10(double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < kGLx.size(); ++i) s += kGLw[i] * inner_integrand(c + h * kGLx[i]);
  return s * h;
}

// Below this point the tail integral is taken from its asymptotic expansion.
constexpr double kSeriesEdge = 0.25;

// 1/4 Re int_X^inf u^{-3/2} e^{iu} du with X = x^-4, summed asymptotically.
double inner_series(double x) {
  if (x <= 0.0) return 0.0;
  const double X = std::pow(x, -4.0);
  const double a = 1.5;
  // J = e^{iX} sum_m (-i)^m (a)_m i X^{-a-m}
  Complex term = Complex(0.0, 1.0) * std::pow(X, -a);
  Complex sum = term;
  for (int m = 1; m < 60; ++m) {
    const Complex next = term * Complex(0.0, -1.0) * (a + m - 1) / X;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return 0.25 * (std::polar(1.0, X) * sum).real();
}

// Knots above the series edge with phase step t^-4 at most 0.5 per panel,
// and the running integral at each knot.
struct KnotTable {
  std::vector<double> knots;
  std::vector<double> cumulative;
};

const KnotTable& knot_table() {
  static const KnotTable table = [] {
    KnotTable t;
    double x = kSeriesEdge;
    double acc = inner_series(kSeriesEdge);
    t.knots.push_back(x);
    t.cumulative.push_back(acc);
    while (x < kPi) {
      const double step = std::min({0.5 * std::pow(x, 5.0) / 4.0, 0.02, kPi - x});
      const double next = x + step;
      acc += gl10(x, next);
      x = next;
      t.knots.push_back(x);
      t.cumulative.push_back(acc);
    }
    t.knots.back() = kPi;
    return t;
  }();
  return table;
}

Distribution make(Primitive::Fn g, bool is_real = true) {
  return Distribution(Primitive(std::move(g), is_real));
}

double parse_param(const std::string& text, const std::string& name) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw DomainError("catalog: bad parameter '" + text + "' for " + name);
  }
  return v;
}

// Weierstrass-type sum: a^k cos(b^k x), k = 0..K.
constexpr double kWa = 0.5;
constexpr double kWb = 2.0;
constexpr int kWK = 12;

}  // namespace

double example36_inner(double x) {
  if (x <= 0.0) return 0.0;
  if (x <= kSeriesEdge) return inner_series(x);
  const auto& t = knot_table();
  x = std::min(x, kPi);
  auto it = std::upper_bound(t.knots.begin(), t.knots.end(), x);
  const auto i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - t.knots.begin() - 1, 0));
  if (t.knots[i] == x) return t.cumulative[i];
  return t.cumulative[i] + gl10(t.knots[i], x);
}

double example36_primitive(double x) {
  if (x <= 0.0) return 0.0;
  return 0.25 * x * x * std::cos(std::pow(x, -4.0)) - 0.5 * example36_inner(x);
}

double cantor_function(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double value = 0.0, scale = 0.5;
  for (int d = 0; d < 60; ++d) {
    u *= 3.0;
    const double digit = std::floor(u);
    u -= digit;
    if (digit == 1.0) return value + scale;
    if (digit == 2.0) value += scale;
    scale *= 0.5;
  }
  return value;
}

CatalogEntry catalog(const std::string& full) {
  const auto colon = full.find(':');
  const std::string name = full.substr(0, colon);
  const bool has_param = colon != std::string::npos;
  const std::string param = has_param ? full.substr(colon + 1) : std::string();
  auto no_param = [&] {
    if (has_param) throw DomainError("catalog: '" + name + "' takes no parameter");
  };

  if (name == "const1") {
    no_param();
    return {full, make([](double x) { return Complex(x + kPi); }), "f = 1, F(x) = x + pi", true};
  }
  if (name == "exp") {
    if (!has_param) throw DomainError("catalog: exp needs an integer frequency, e.g. exp:4");
    const double jd = parse_param(param, name);
    if (jd != std::round(jd) || std::abs(jd) > 1e6) {
      throw DomainError("catalog: exp frequency must be an integer");
    }
    const int j = static_cast<int>(jd);
    if (j == 0) {
      return {full, make([](double x) { return Complex(x + kPi); }), "e_0 = 1", true};
    }
    const Complex ij(0.0, j);
    const Complex start = std::polar(1.0, -j * kPi);
    return {full,
            make([ij, j, start](double x) { return (std::polar(1.0, j * x) - start) / ij; },
                 false),
            "e_j(t) = exp(ijt), F(x) = (exp(ijx) - exp(-ij pi)) / (ij)", true};
  }
  if (name == "xsin") {
    no_param();
    return {full,
            make([](double x) { return Complex(x > 0.0 ? x * std::sin(1.0 / (x * x)) : 0.0); }),
            "F(x) = x sin(x^-2) on (0, pi], 0 on [-pi, 0]; f not Lebesgue integrable", false};
  }
  if (name == "osc") {
    if (!has_param) throw DomainError("catalog: osc needs an exponent, e.g. osc:0.5");
    const double a = parse_param(param, name);
    if (!(a < 1.0) || a < 0.0) throw DomainError("catalog: osc exponent must lie in [0, 1)");
    const double p = 1.0 - a;
    const double top = std::pow(kPi, p);
    return {full,
            make([p, top](double x) { return Complex((std::pow(std::abs(x), p) - top) / p); }),
            "f(t) = |t|^-a sgn(t), F(x) = (|x|^(1-a) - pi^(1-a)) / (1-a)", true};
  }
  if (name == "weierstrass") {
    no_param();
    return {full,
            make([](double x) {
              double s = 0.0, ak = 1.0, bk = 1.0;
              for (int k = 0; k <= kWK; ++k) {
                s += ak * (std::cos(bk * x) - std::cos(bk * kPi));
                ak *= kWa;
                bk *= kWb;
              }
              return Complex(s);
            }),
            "F(x) = sum_{k<=12} 0.5^k (cos(2^k x) - cos(2^k pi)); a*b = 1, tail 0.5^13 < 1.3e-4 "
            "in sup norm; highest frequency 4096 stays resolved on the default grid ladder",
            false};
  }
  if (name == "cantor") {
    no_param();
    return {full, make([](double x) { return Complex(cantor_function((x + kPi) / kTwoPi)); }),
            "F(x) = c((x + pi) / 2pi), Cantor function; F' = 0 a.e. but drift 1", false};
  }
  if (name == "example36") {
    no_param();
    knot_table();
    return {full, make([](double x) { return Complex(example36_primitive(x)); }),
            "f(t) = t^-3 sin(t^-4) on (0, pi); inner integral by asymptotic series below 0.25 "
            "and 10-point Gauss-Legendre panels above",
            false};
  }
  if (name == "heaviside-half-primitive") {
    no_param();
    return {full, make([](double x) { return Complex(std::max(x, 0.0)); }),
            "f = indicator of (0, pi), F(x) = max(x, 0), drift pi", true};
  }
  throw LookupError("catalog: unknown name '" + full + "'");
}

std::vector<std::string> catalog_names() {
  return {"const1", "exp:<j>", "xsin", "osc:<alpha>", "weierstrass", "cantor", "example36",
          "heaviside-half-primitive"};
}

std::vector<std::string> catalog_test_set() {
  return {"const1", "exp:1",  "exp:4",     "xsin",
          "osc:0.5", "weierstrass", "cantor", "example36", "heaviside-half-primitive"};
}

}  // namespace torus
