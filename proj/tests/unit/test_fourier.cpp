#include "doctest.h"
#include "support.hpp"
#include "torus/catalog.hpp"
#include "torus/fourier.hpp"
#include "torus/norms.hpp"

using namespace torus;
using testing::Gen;

namespace {

// Fourier transform of the Cantor measure carried to [-pi, pi]:
// prod_k cos(2 pi n / 3^k).
double cantor_coeff(int n) {
  double p = 1.0, s = 1.0;
  for (int k = 1; k < 60; ++k) {
    s /= 3.0;
    p *= std::cos(kTwoPi * n * s);
  }
  return p;
}

}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("const1 has a single coefficient 2pi") {
    const FourierCoeffs c = coeffs(catalog("const1").f, 8);
    CHECK(c.window() == 8);
    CHECK(std::abs(c[0] - kTwoPi) < 1e-12);
    for (int n = 1; n <= 8; ++n) {
      CHECK(std::abs(c[n]) < 1e-10);
      CHECK(std::abs(c[-n]) < 1e-10);
    }
  }

  TEST_CASE("zero distribution has zero coefficients") {
    const FourierCoeffs c = coeffs(Distribution(), 4);
    for (Complex v : c.values()) CHECK(v == Complex{});
    CHECK(d_norm(c) == 0.0);
    for (const GrowthRow& r : growth_report(Distribution(), 4)) {
      CHECK(r.value == Complex{});
      CHECK(r.ok);
    }
  }

  TEST_CASE("coefficient 0 is the drift") {
    for (const auto& name : catalog_test_set()) {
      const Distribution f = catalog(name).f;
      CAPTURE(name);
      CHECK(std::abs(coeff(f, 0) - f.drift()) < 1e-14);
    }
  }

  TEST_CASE("e_j picks out frequency j") {
    for (int j : {1, 2, 4, -3, 9}) {
      const Distribution f = catalog("exp:" + std::to_string(j)).f;
      CAPTURE(j);
      CHECK(std::abs(coeff(f, j) - kTwoPi) < 1e-9);
      CHECK(std::abs(coeff(f, j + 1)) < 1e-9);
      CHECK(std::abs(coeff(f, -j)) < 1e-9);
    }
  }

  TEST_CASE("translation multiplies by e^{-ins}") {
    for (const char* name : {"osc:0.5", "weierstrass", "heaviside-half-primitive"}) {
      const Distribution f = catalog(name).f;
      for (double s : {0.4, -2.0}) {
        const FourierCoeffs a = coeffs(f, 6);
        const FourierCoeffs b = coeffs(translate(f, s), 6);
        for (int n = -6; n <= 6; ++n) {
          CAPTURE(name);
          CAPTURE(n);
          CHECK(std::abs(b[n] - a[n] * std::polar(1.0, -n * s)) < 1e-7 * (1 + std::abs(a[n])));
        }
      }
    }
  }

  TEST_CASE("linearity and conjugate symmetry") {
    const Distribution f = catalog("osc:0.5").f;
    const Distribution g = catalog("cantor").f;
    const FourierCoeffs a = coeffs(f, 5), b = coeffs(g, 5);
    const FourierCoeffs s = coeffs(f + Complex(0, 2) * g, 5);
    for (int n = -5; n <= 5; ++n) {
      CHECK(std::abs(s[n] - a[n] - Complex(0, 2) * b[n]) < 1e-8);
      CHECK(std::abs(a[-n] - std::conj(a[n])) < 1e-9);
      CHECK(std::abs(b[-n] - std::conj(b[n])) < 1e-9);
    }
  }

  TEST_CASE("trig polynomials: primitive formula agrees with direct quadrature") {
    Gen gen(51);
    for (int trial = 0; trial < 20; ++trial) {
      const TrigPolynomial p = gen.trig(6, gen.coin());
      const Distribution f = p.to_distribution();
      for (int n = -8; n <= 8; ++n) {
        const Complex want =
            testing::simpson_c([&](double t) { return p(t) * std::polar(1.0, -n * t); }, -kPi, kPi, 4000);
        CHECK(std::abs(coeff(f, n) - want) < 1e-8);
        CHECK(std::abs(coeff(f, n) - kTwoPi * p[n]) < 1e-8);
      }
    }
  }

  TEST_CASE("Cantor coefficients match the infinite product") {
    const FourierCoeffs c = coeffs(catalog("cantor").f, 30);
    for (int n = -30; n <= 30; ++n) {
      CAPTURE(n);
      CHECK(std::abs(c[n] - cantor_coeff(n)) < 1e-7);
    }
  }

  TEST_CASE("d-norm definition") {
    std::vector<Complex> v;
    for (int n = -5; n <= 5; ++n) v.push_back(std::abs(n) + 1.0);
    CHECK(d_norm(FourierCoeffs(5, v)) == doctest::Approx(1.0));
    CHECK(d_norm(coeffs(catalog("const1").f, 3)) == doctest::Approx(kTwoPi));
  }

  TEST_CASE("osc family: d-norm stays bounded while the norm blows up") {
    double last_norm = 0.0;
    for (double a : {0.5, 0.8, 0.95}) {
      const Distribution f = catalog("osc:" + std::to_string(a)).f;
      const FourierCoeffs c = coeffs(f, 16);
      const double bound = 2.0 * std::pow(kPi, 2.0 - a) / (2.0 - a);
      CAPTURE(a);
      CHECK(d_norm(c) <= bound * (1 + 1e-9));
      for (int n = 1; n <= 16; ++n) CHECK(std::abs(c[n]) / n <= bound * (1 + 1e-9));
      const double norm = alexiewicz_norm_estimate(f).value;
      CHECK(norm > last_norm);
      last_norm = norm;
    }
    // ||f_a|| = pi^{1-a}/(1-a), the drop of F from -pi to 0, grows without bound as a -> 1.
    CHECK(last_norm == doctest::Approx(std::pow(kPi, 0.05) / 0.05).epsilon(1e-6));
  }

  TEST_CASE("growth report on e_1") {
    const auto rows = growth_report(catalog("exp:1").f, 3);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].n == -3);
    CHECK(rows[3].n == 1);
    CHECK(std::abs(rows[3].value) == doctest::Approx(kTwoPi));
    CHECK(rows[3].bound_f == doctest::Approx(4 * std::sqrt(2.0) * 2).epsilon(1e-6));
    for (const auto& r : rows) CHECK(r.ok);
  }

  TEST_CASE("growth bounds hold for the catalog up to |n| = 16") {
    for (const auto& name : catalog_test_set()) {
      if (name == "example36") continue;  // covered by the acceptance run
      for (const GrowthRow& r : growth_report(catalog(name).f, 16)) {
        CAPTURE(name);
        CAPTURE(r.n);
        CHECK(std::abs(r.value) <= r.bound_f * (1 + 1e-6) + 1e-9);
        CHECK(std::abs(r.value) <= r.bound_h * (1 + 1e-6) + 1e-9);
        CHECK(std::abs(r.value) <= r.bound_e * (1 + 1e-6) + 1e-9);
      }
    }
  }

  TEST_CASE("Weierstrass ratio trends to zero") {
    const auto rows = growth_report(catalog("weierstrass").f, 64);
    auto ratio_at = [&](int n) {
      for (const auto& r : rows)
        if (r.n == n) return r.ratio;
      return -1.0;
    };
    // Nonzero coefficients sit at powers of two.
    CHECK(ratio_at(1) > ratio_at(4));
    CHECK(ratio_at(4) > ratio_at(16));
    CHECK(ratio_at(16) > ratio_at(64));
    CHECK(ratio_at(64) < 0.05 * ratio_at(1));
  }

  TEST_CASE("derivative of a continuous periodic function") {
    auto G = [](double x) { return (kPi * kPi - x * x) * std::sin(3 * x); };
    const Distribution f(Primitive([&](double x) { return Complex(G(x)); }, true));
    CHECK(std::abs(f.drift()) < 1e-12);
    for (int n : {-5, -1, 1, 2, 3, 7}) {
      const Complex Ghat =
          testing::simpson_c([&](double t) { return G(t) * std::polar(1.0, -n * t); }, -kPi, kPi, 20000);
      CAPTURE(n);
      CHECK(std::abs(coeff(f, n) - Complex(0, n) * Ghat) < 1e-8);
    }
  }

  TEST_CASE("e_j tends to zero in norm but not coefficientwise") {
    for (int j : {1, 4, 16, 64}) {
      const Distribution e = catalog("exp:" + std::to_string(j)).f;
      CAPTURE(j);
      CHECK(alexiewicz_norm_estimate(e).value == doctest::Approx(2.0 / j).epsilon(1e-6));
      CHECK(std::abs(coeff(e, j) - kTwoPi) < 1e-9);
    }
  }

  TEST_CASE("function coefficients of a step") {
    const FourierCoeffs c =
        function_coeffs([](double t) { return Complex(t > 0 ? 1.0 : 0.0); }, 4, {-kPi, 0.0, kPi});
    CHECK(std::abs(c[0] - kPi) < 1e-12);
    for (int n = 1; n <= 4; ++n) {
      const Complex want = (1.0 - std::polar(1.0, -n * kPi)) / Complex(0, n);
      CHECK(std::abs(c[n] - want) < 1e-10);
    }
  }
}
