#include "doctest.h"
#include "support.hpp"
#include "torus/analysis.hpp"
#include "torus/catalog.hpp"
#include "torus/fourier.hpp"

using namespace torus;

TEST_SUITE("analysis") {
  TEST_CASE("Parseval sum of one against one") {
    const ParsevalSum p = parseval_sum(catalog("const1").f, BVFunction::constant(1.0), 4);
    CHECK(p.value.real() == doctest::Approx(kTwoPi));
    CHECK(p.target.real() == doctest::Approx(kTwoPi));
    CHECK(p.printed.real() == doctest::Approx(4 * kPi * kPi));
    CHECK(p.gap < 1e-10);
  }

  TEST_CASE("Parseval sum of zero") {
    const ParsevalSum p = parseval_sum(Distribution(), bv_catalog("tent"), 8);
    CHECK(p.value == Complex{});
    CHECK(p.target == Complex{});
  }

  TEST_CASE("Parseval sum equals int f sigma_n[g] by a direct oracle") {
    for (const char* fname : {"osc:0.5", "cantor", "exp:2"}) {
      const Distribution f = catalog(fname).f;
      const BVFunction g = bv_catalog("indicator");
      const int n = 6;
      // p = sigma_n[g]; int f p = F(pi) p(pi) - int F p'.
      std::vector<Complex> c(2 * n + 1);
      for (int k = -n; k <= n; ++k) c[k + n] = (1.0 - std::abs(k) / (n + 1.0)) * g.fourier(k) / kTwoPi;
      auto p = [&](double t) {
        Complex s{};
        for (int k = -n; k <= n; ++k) s += c[k + n] * std::polar(1.0, k * t);
        return s;
      };
      auto dp = [&](double t) {
        Complex s{};
        for (int k = -n; k <= n; ++k) s += Complex(0, k) * c[k + n] * std::polar(1.0, k * t);
        return s;
      };
      const Primitive F = f.primitive();
      const Complex want =
          F(kPi) * p(kPi) - testing::simpson_c([&](double t) { return F(t) * dp(t); }, -kPi, kPi, 200000);
      CAPTURE(fname);
      CHECK(std::abs(parseval_sum(f, g, n).value - want) < 1e-7);
    }
  }

  TEST_CASE("xsin against sin at n = 64") {
    const ParsevalSum p = parseval_sum(catalog("xsin").f, bv_catalog("sin"), 64);
    CHECK(p.gap < 1e-3);
  }

  TEST_CASE("Cesaro weight leaves a gap of |target| / (n + 1) against sin") {
    // sin has coefficients only at k = +-1, both weighted by n / (n + 1).
    for (const char* fname : {"xsin", "exp:1", "osc:0.5"}) {
      for (int n : {16, 64}) {
        const ParsevalSum p = parseval_sum(catalog(fname).f, bv_catalog("sin"), n);
        CAPTURE(fname);
        CAPTURE(n);
        CHECK(p.gap == doctest::Approx(std::abs(p.target) / (n + 1)).epsilon(1e-4));
      }
    }
  }

  TEST_CASE("Fejer lemma on hand-evaluated pairs") {
    const std::vector<int> ns{1, 2, 5, 16};
    const FejerLemmaReport odd = fejer_lemma_sweep(catalog("const1").f, bv_catalog("sin"), ns);
    for (const auto& r : odd.rows) CHECK(std::abs(r.integral) < 1e-9);
    const FejerLemmaReport even = fejer_lemma_sweep(catalog("const1").f, bv_catalog("one-plus-cos"), ns);
    CHECK(even.limit.real() == doctest::Approx(kTwoPi));
    for (const auto& r : even.rows) {
      CHECK(r.integral.real() == doctest::Approx(kTwoPi).epsilon(1e-9));
      CHECK(r.over_n == doctest::Approx(kTwoPi / r.n).epsilon(1e-9));
    }
  }

  TEST_CASE("Fejer lemma: I_n / n tends to zero") {
    const FejerLemmaReport r = fejer_lemma_sweep(catalog("osc:0.5").f, bv_catalog("indicator"), {1, 4, 16, 64});
    REQUIRE(r.rows.size() == 4);
    for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i].over_n < r.rows[i - 1].over_n);
    CHECK(r.rows.back().over_n < 0.05);
  }

  TEST_CASE("BV coefficient test") {
    const BVCoefficientReport z = bv_coefficient_test(FourierCoeffs(3, std::vector<Complex>(7)), 1.0, 3);
    CHECK(z.max_bv_norm == 0.0);
    CHECK(z.holds);

    const BVFunction g = BVFunction::indicator(0.0, kPi);
    const int N = 32;
    std::vector<Complex> a;
    for (int k = -N; k <= N; ++k) a.push_back(g.fourier(k));
    const BVCoefficientReport sq = bv_coefficient_test(FourierCoeffs(N, a), 3.0, N);
    CHECK(sq.rows.size() == N + 1);
    CHECK(sq.max_bv_norm <= 3.0 + 0.05);
    CHECK(sq.rows[0].sup == doctest::Approx(0.5));

    std::vector<Complex> grow;
    for (int k = -N; k <= N; ++k) grow.push_back(std::abs(k) + 1.0);
    const BVCoefficientReport gr = bv_coefficient_test(FourierCoeffs(N, grow), 3.0, N);
    CHECK_FALSE(gr.holds);
    for (std::size_t i = 1; i < gr.rows.size(); ++i) CHECK(gr.rows[i].bv_norm > gr.rows[i - 1].bv_norm);
    CHECK(gr.rows.back().bv_norm > 20 * gr.rows[1].bv_norm);
  }

  TEST_CASE("BV norm of a trig polynomial") {
    const TrigPolynomial c(1, {0.5, 0.0, 0.5});  // cos t
    const BVCoefficientRow r = trig_bv_norm(c);
    CHECK(r.sup == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.variation == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(r.bv_norm == doctest::Approx(5.0).epsilon(1e-10));
  }

  TEST_CASE("Fubini with a constant multiplier") {
    const Distribution f = catalog("osc:0.5").f;
    const FubiniReport r = fubini_check(f, BVFunction::constant(2.0), -0.5, 2.0);
    CHECK(r.ok);
    // f * 2 is the constant 2 F(pi).
    CHECK(std::abs(r.lhs - 2.0 * f.drift() * 2.5) < 1e-9);
  }

  TEST_CASE("Fubini on the named pairs") {
    const FubiniReport a = fubini_check(catalog("xsin").f, bv_catalog("indicator"), 0.0, 1.0);
    CHECK(a.ok);
    CHECK(a.gap < 1e-6);
    const FubiniReport b = fubini_check(catalog("exp:2").f, bv_catalog("cos:2"), -1.0, 1.0, 1e-8);
    CHECK(b.ok);
    CHECK(b.gap < 1e-8);
    CHECK(std::abs(b.lhs - kPi * std::sin(2.0)) < 1e-7);
  }

  TEST_CASE("approximation sweep on e_1") {
    const Distribution f = catalog("exp:1").f;
    for (const auto& r : approximation_sweep(f, KernelKind::fejer, {1, 3, 7})) {
      CHECK(r.distance == doctest::Approx(2.0 / (r.n + 1)).epsilon(1e-6));
    }
    for (const auto& r : approximation_sweep(f, KernelKind::dirichlet, {1, 4})) CHECK(r.distance < 1e-9);
  }

  TEST_CASE("approximation sweep shrinks on osc") {
    const auto rows = approximation_sweep(catalog("osc:0.5").f, KernelKind::fejer, {4, 16, 64});
    CHECK(rows[1].distance < rows[0].distance);
    CHECK(rows[2].distance < rows[1].distance);
  }
}
