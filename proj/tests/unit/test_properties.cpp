#include "doctest.h"
#include "support.hpp"
#include "torus/catalog.hpp"
#include "torus/convolution.hpp"
#include "torus/norms.hpp"

using namespace torus;
using testing::Gen;

namespace {

double brute_grid_norm(const std::vector<Complex>& s) {
  const int N = static_cast<int>(s.size()) - 1;
  const Complex drift = s[N];
  auto at = [&](int i) { return s[i % N] + static_cast<double>(i / N) * drift; };
  double best = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i; j <= i + N; ++j) best = std::max(best, std::abs(at(j) - at(i)));
  return best;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("norm sits between sup|F| and 2 sup|F|") {
    Gen gen(81);
    for (int trial = 0; trial < 40; ++trial) {
      const Distribution f = gen.trig(6, gen.coin()).to_distribution();
      const double norm = alexiewicz_norm_estimate(f).value;
      const double equiv = alexiewicz_norm_equiv_estimate(f).value;
      CHECK(equiv <= norm * (1 + 1e-7) + 1e-12);
      CHECK(norm <= 2 * equiv * (1 + 1e-7) + 1e-12);
    }
  }

  TEST_CASE("norm is a seminorm on random trig polynomials") {
    Gen gen(82);
    for (int trial = 0; trial < 30; ++trial) {
      const Distribution f = gen.trig(5, gen.coin()).to_distribution();
      const Distribution g = gen.trig(5, gen.coin()).to_distribution();
      const Complex c = gen.value(false);
      const double nf = alexiewicz_norm_estimate(f).value;
      const double ng = alexiewicz_norm_estimate(g).value;
      CHECK(alexiewicz_norm_estimate(f + g).value <= (nf + ng) * (1 + 1e-7));
      CHECK(alexiewicz_norm_estimate(c * f).value == doctest::Approx(std::abs(c) * nf).epsilon(1e-6));
    }
  }

  TEST_CASE("grid norm equals the quadratic scan") {
    Gen gen(83);
    for (int trial = 0; trial < 50; ++trial) {
      const int N = gen.integer(1, 40);
      const bool real = gen.coin();
      std::vector<Complex> s(N + 1);
      for (int i = 1; i <= N; ++i) s[i] = gen.value(real);
      const double want = brute_grid_norm(s);
      const double got = grid_alexiewicz_norm(s);
      CAPTURE(N);
      if (real) {
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
      } else {
        // Complex samples go through direction projections; the scan is the truth.
        CHECK(got <= want * (1 + 1e-12));
        CHECK(got >= want * std::cos(kPi / 64) - 1e-12);
      }
    }
  }

  TEST_CASE("step multipliers: product integral is a finite sum") {
    Gen gen(84);
    const std::vector<std::string> names{"osc:0.5", "cantor", "weierstrass", "exp:3", "xsin"};
    for (int trial = 0; trial < 30; ++trial) {
      const BVFunction g = gen.steps(6, gen.coin());
      const Distribution f = catalog(names[trial % names.size()]).f;
      const Primitive F = f.primitive();
      Complex want{};
      for (std::size_t i = 0; i < g.size(); ++i) {
        const double a = g.breakpoint(i);
        const double b = i + 1 < g.size() ? g.breakpoint(i + 1) : g.breakpoint(0) + kTwoPi;
        want += g.right(i) * (F(b) - F(a));
      }
      CHECK(std::abs(integrate_product(f, g) - want) < 1e-10 * (1 + std::abs(want)));
      CHECK(std::abs(integrate_product(f, g.with_lambda(gen.uniform(0, 1))) - want) < 1e-10 * (1 + std::abs(want)));
    }
  }

  TEST_CASE("step multipliers: variation is the sum of jumps") {
    Gen gen(85);
    for (int trial = 0; trial < 50; ++trial) {
      const BVFunction g = gen.steps(8, gen.coin());
      double v = 0.0, sup = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        v += std::abs(g.right(i) - g.left(i));
        sup = std::max(sup, std::abs(g.right(i)));
      }
      const VariationReport r = variation(g);
      CHECK(r.variation == doctest::Approx(v).epsilon(1e-12));
      CHECK(r.sup_norm >= sup * (1 - 1e-12));
      const int n = gen.integer(1, 4);
      CHECK(variation(g.dilate(n)).variation == doctest::Approx(n * v).epsilon(1e-12));
    }
  }

  TEST_CASE("cubic multipliers: variation matches a fine inscribed polygon") {
    Gen gen(90);
    for (int trial = 0; trial < 20; ++trial) {
      const BVFunction g = gen.cubic(4, gen.coin());
      double poly = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const int m = 20000;
        Complex prev = g.right(i);
        for (int k = 1; k <= m; ++k) {
          const Complex cur = eval_cubic(g.piece(i), g.length(i) * k / m);
          poly += std::abs(cur - prev);
          prev = cur;
        }
        poly += std::abs(g.right(i) - g.left(i));
      }
      const double v = variation(g).variation;
      CAPTURE(g.is_real());
      CHECK(v >= poly * (1 - 1e-12));
      CHECK(v == doctest::Approx(poly).epsilon(1e-7));
    }
  }

  TEST_CASE("Holder inequality on random pairs") {
    Gen gen(86);
    const auto names = catalog_test_set();
    for (int trial = 0; trial < 30; ++trial) {
      const Distribution f = trial % 2 ? gen.trig(4, gen.coin()).to_distribution()
                                       : catalog(names[gen.integer(0, 7)]).f;
      const BVFunction g = gen.cubic(5, gen.coin());
      const HolderReport h = holder_check(f, g);
      CHECK(h.holds);
      CHECK(h.lhs <= h.rhs * (1 + 1e-8) + 1e-12);
    }
  }

  TEST_CASE("Stieltjes integral is additive over adjacent intervals") {
    Gen gen(87);
    for (int trial = 0; trial < 30; ++trial) {
      const BVFunction g = gen.cubic(5, gen.coin());
      const Primitive F = gen.trig(4, gen.coin()).to_distribution().primitive();
      double a = gen.uniform(-4, 4), b = gen.uniform(-4, 4);
      if (a > b) std::swap(a, b);
      b = std::min(b, a + kTwoPi);
      const double c = gen.uniform(a, b);
      const Complex whole = stieltjes(F, g, a, b);
      const Complex parts = stieltjes(F, g, a, c) + stieltjes(F, g, c, b);
      CHECK(std::abs(whole - parts) < 1e-9 * (1 + std::abs(whole)));
    }
  }

  TEST_CASE("convolution of a trig polynomial with a step multiplies coefficients") {
    Gen gen(88);
    for (int trial = 0; trial < 15; ++trial) {
      const TrigPolynomial p = gen.trig(4, gen.coin());
      const BVFunction g = gen.steps(5, gen.coin());
      const PeriodicFunction h = convolve_bv(p.to_distribution(), g);
      for (int i = 0; i < 5; ++i) {
        const double x = gen.angle();
        Complex want{};
        for (int k = -p.degree(); k <= p.degree(); ++k) want += p[k] * g.fourier(k) * std::polar(1.0, k * x);
        CHECK(std::abs(h(x) - want) < 1e-9 * (1 + std::abs(want)));
      }
    }
  }

  TEST_CASE("translation preserves the norm") {
    Gen gen(89);
    for (int trial = 0; trial < 20; ++trial) {
      const Distribution f = gen.trig(5, gen.coin()).to_distribution();
      const double s = gen.uniform(-10, 10);
      CHECK(alexiewicz_norm_estimate(translate(f, s)).value ==
            doctest::Approx(alexiewicz_norm_estimate(f).value).epsilon(1e-6));
    }
  }
}
