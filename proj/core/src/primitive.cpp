#include "torus/primitive.hpp"

#include <algorithm>
#include <cmath>

#include "torus/errors.hpp"

namespace torus {

Primitive::Primitive()
    : g_(std::make_shared<const Fn>([](double) { return Complex{}; })) {}

Primitive::Primitive(Fn g, bool is_real, int grid_hint)
    : g_(std::make_shared<const Fn>(std::move(g))), real_(is_real), grid_(grid_hint) {
  if (grid_hint < 2) throw DomainError("Primitive: grid hint must be at least 2");
  base_ = (*g_)(-kPi);
  drift_ = (*g_)(kPi) - base_;
  if (!std::isfinite(drift_.real()) || !std::isfinite(drift_.imag())) {
    throw DomainError("Primitive: non-finite drift");
  }
  if (real_) drift_.imag(0.0);
}

Primitive Primitive::from_samples(std::vector<Complex> values, bool is_real) {
  if (values.size() < 2) throw DomainError("Primitive::from_samples: need two samples");
  const Complex v0 = values.front();
  for (auto& v : values) v -= v0;
  const auto n = static_cast<int>(values.size()) - 1;
  auto data = std::make_shared<const std::vector<Complex>>(std::move(values));
  const double h = kTwoPi / n;
  return Primitive(
      [data, n, h](double x) {
        const double u = (x + kPi) / h;
        int i = std::clamp(static_cast<int>(std::floor(u)), 0, n - 1);
        const double w = u - i;
        return (1.0 - w) * (*data)[i] + w * (*data)[i + 1];
      },
      is_real, std::max(n, 2));
}

Complex Primitive::local(double x) const {
  if (!std::isfinite(x)) throw DomainError("Primitive: non-finite argument");
  if (x <= -kPi) return {};
  if (x >= kPi) return drift_;
  Complex v = (*g_)(x) - base_;
  if (real_) v.imag(0.0);
  return v;
}

Complex Primitive::operator()(double x) const {
  const Reduced r = reduce(x);
  return static_cast<double>(r.turns) * drift_ + local(r.angle);
}

Complex integrate(const Distribution& f, double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: non-finite limit");
  if (a == b) return {};
  const auto& F = f.primitive();
  return F(b) - F(a);
}

Distribution translate(const Distribution& f, double s) {
  if (!std::isfinite(s)) throw DomainError("translate: non-finite shift");
  const Primitive F = f.primitive();
  return Distribution(Primitive([F, s](double x) { return F(x - s); }, F.is_real(),
                                F.grid_hint()));
}

Distribution operator+(const Distribution& f, const Distribution& g) {
  const Primitive F = f.primitive();
  const Primitive G = g.primitive();
  return Distribution(Primitive([F, G](double x) { return F.local(x) + G.local(x); },
                                F.is_real() && G.is_real(),
                                std::max(F.grid_hint(), G.grid_hint())));
}

Distribution operator-(const Distribution& f, const Distribution& g) {
  return f + Complex(-1.0) * g;
}

Distribution operator*(Complex c, const Distribution& f) {
  const Primitive F = f.primitive();
  return Distribution(Primitive([F, c](double x) { return c * F.local(x); },
                                F.is_real() && c.imag() == 0.0, F.grid_hint()));
}

}  // namespace torus
