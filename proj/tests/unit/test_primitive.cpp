#include "doctest.h"
#include "support.hpp"
#include "torus/catalog.hpp"
#include "torus/errors.hpp"
#include "torus/primitive.hpp"

using namespace torus;
using testing::Gen;

TEST_SUITE("primitive") {
  TEST_CASE("reduce lands in [-pi, pi) and counts turns") {
    Gen gen(11);
    for (int i = 0; i < 2000; ++i) {
      const double x = gen.uniform(-50.0, 50.0);
      const Reduced r = reduce(x);
      CHECK(r.angle >= -kPi);
      CHECK(r.angle < kPi);
      CHECK(r.angle + kTwoPi * r.turns == doctest::Approx(x).epsilon(1e-13));
    }
    CHECK(reduce(kPi).angle == doctest::Approx(-kPi));
    CHECK(reduce(kPi).turns == 1);
    CHECK(reduce(-kPi).angle == -kPi);
    CHECK(reduce(-kPi).turns == 0);
  }

  TEST_CASE("every catalog primitive vanishes at -pi") {
    for (const auto& name : catalog_test_set()) {
      CAPTURE(name);
      CHECK(std::abs(catalog(name).f.primitive()(-kPi)) == 0.0);
    }
  }

  TEST_CASE("extension adds one drift per turn") {
    Gen gen(12);
    for (const auto& name : catalog_test_set()) {
      const Primitive F = catalog(name).f.primitive();
      for (int i = 0; i < 20; ++i) {
        const double x = gen.angle();
        for (int n = -4; n <= 4; ++n) {
          CAPTURE(name);
          const Complex lhs = F(x + kTwoPi * n);
          const Complex rhs = F(x) + static_cast<double>(n) * F.drift();
          CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
        }
      }
    }
  }

  TEST_CASE("sampled primitives get closer as the grid doubles") {
    for (const auto& name : catalog_test_set()) {
      if (name == "xsin" || name == "example36") continue;  // oscillation unresolved at these sizes
      const Primitive F = catalog(name).f.primitive();
      auto gap = [&F](int n) {
        double g = 0.0;
        for (int i = 0; i < n; ++i) {
          const double x = -kPi + kTwoPi * i / n;
          g = std::max(g, std::abs(F(x + kTwoPi / n) - F(x)));
        }
        return g;
      };
      CAPTURE(name);
      CHECK(gap(1 << 14) < gap(1 << 8));
      CHECK(gap(1 << 14) < 0.05);
    }
  }

  TEST_CASE("linear primitive extends to 4pi at 3pi") {
    const Primitive F([](double x) { return Complex(x + kPi); }, true);
    CHECK(F.drift().real() == doctest::Approx(kTwoPi));
    CHECK(F(3.0 * kPi).real() == doctest::Approx(4.0 * kPi));
    CHECK(F(-kPi).real() == 0.0);
  }

  TEST_CASE("cantor primitive: value 1/2 at 0, drift 1, flat off the Cantor set") {
    const Distribution f = catalog("cantor").f;
    CHECK(f.primitive()(0.0).real() == doctest::Approx(0.5));
    CHECK(integrate(f, -kPi, kPi).real() == doctest::Approx(1.0));
    // The pointwise derivative is 0 on the removed middle thirds, so its
    // integral over the period is 0 while the distribution integrates to 1.
    const double h = 1e-6;
    for (double u : {0.5, 0.2, 0.8, 0.15, 0.85, 0.4}) {
      const double x = -kPi + kTwoPi * u;
      const double q = (f.primitive()(x + h) - f.primitive()(x - h)).real() / (2 * h);
      CHECK(q == doctest::Approx(0.0));
    }
  }

  TEST_CASE("xsin integrates to pi sin(pi^-2) over [0, pi]") {
    const Distribution f = catalog("xsin").f;
    CHECK(integrate(f, 0.0, kPi).real() == doctest::Approx(kPi * std::sin(1.0 / (kPi * kPi))).epsilon(1e-13));
    CHECK(std::abs(integrate(f, 1.1, 1.1)) == 0.0);
  }

  TEST_CASE("translation by 0 and by 2pi leaves the distribution unchanged") {
    Gen gen(13);
    for (const auto& name : catalog_test_set()) {
      const Distribution f = catalog(name).f;
      const Distribution t0 = translate(f, 0.0);
      const Distribution t1 = translate(f, kTwoPi);
      for (int i = 0; i < 20; ++i) {
        const double x = gen.angle();
        CAPTURE(name);
        CHECK(std::abs(t0.primitive()(x) - f.primitive()(x)) < 1e-12);
        CHECK(std::abs(t1.primitive()(x) - f.primitive()(x)) < 1e-11);
      }
    }
  }

  TEST_CASE("translation moves the primitive") {
    const Distribution f = catalog("osc:0.5").f;
    const double s = 0.7;
    const Distribution g = translate(f, s);
    for (double x : {-2.0, 0.1, 2.5}) {
      const Complex want = f.primitive()(x - s) - f.primitive()(-kPi - s);
      CHECK(std::abs(g.primitive()(x) - want) < 1e-13);
    }
  }

  TEST_CASE("sample-built primitive interpolates linearly") {
    std::vector<Complex> v{0.0, 1.0, 3.0, 2.0, 4.0};
    const Primitive F = Primitive::from_samples(v, true);
    CHECK(F.drift().real() == doctest::Approx(4.0));
    const double h = kTwoPi / 4;
    CHECK(F(-kPi + 0.5 * h).real() == doctest::Approx(0.5));
    CHECK(F(-kPi + 2.25 * h).real() == doctest::Approx(2.75));
    CHECK(F(-kPi + 1.0 * h + kTwoPi).real() == doctest::Approx(5.0));
  }

  TEST_CASE("arithmetic acts on primitives") {
    const Distribution a = catalog("exp:1").f;
    const Distribution b = catalog("heaviside-half-primitive").f;
    const Distribution s = a + Complex(2.0) * b;
    const Distribution d = s - a;
    for (double x : {-3.0, -0.5, 0.5, 3.0}) {
      CHECK(std::abs(s.primitive()(x) - (a.primitive()(x) + 2.0 * b.primitive()(x))) < 1e-14);
      CHECK(std::abs(d.primitive()(x) - 2.0 * b.primitive()(x)) < 1e-14);
    }
  }
}
