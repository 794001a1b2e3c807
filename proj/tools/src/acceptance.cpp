#include "torus_cli/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <mutex>

#include "torus/analysis.hpp"
#include "torus/catalog.hpp"
#include "torus/convolution.hpp"
#include "torus/kernels.hpp"
#include "torus/norms.hpp"
#include "torus_cli/commands.hpp"

namespace torus::cli {
namespace {

// Ratios of two vanishing quantities count as passing below this.
constexpr double kZeroFloor = 1e-10;

class Checks {
 public:
  Checks() : table_({"check", "value", "relation", "bound", "pass"}) {}

  void add(const std::string& label, double value, const std::string& rel, Cell bound, bool ok) {
    table_.add_row({label, value, rel, std::move(bound), static_cast<long long>(ok)});
    pass_ = pass_ && ok;
  }
  void less(const std::string& label, double value, double bound) {
    add(label, value, "<", bound, value < bound);
  }
  void at_most(const std::string& label, double value, double bound) {
    add(label, value, "<=", bound, value <= bound);
  }
  // value_hi / value_lo < factor, with both sides below the zero floor passing.
  void ratio(const std::string& label, double hi, double lo, double factor) {
    if (lo < kZeroFloor && hi < kZeroFloor) {
      add(label, 0.0, "zero-floor", factor, true);
      return;
    }
    add(label, lo > 0.0 ? hi / lo : INFINITY, "<", factor, hi < factor * lo);
  }
  void runtime(const std::string& label, double seconds, double limit) {
    seconds_[label] = seconds;
    add(label, seconds < limit ? 1.0 : 0.0, "==", 1.0, seconds < limit);
  }

  bool pass() const { return pass_; }
  ResultTable take() {
    for (const auto& [k, v] : seconds_) table_.set_meta(k, format_number(v));
    return std::move(table_);
  }

 private:
  ResultTable table_;
  bool pass_ = true;
  std::map<std::string, double> seconds_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const FourierCoeffs& cached_coeffs(const std::string& name, int N) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, FourierCoeffs> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(name, N);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, coeffs(catalog(name).f, N)).first;
  return it->second;
}

void criterion_1(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int worst_j = 1;
  for (int j = 1; j <= 32; ++j) {
    const double v = alexiewicz_norm(catalog("exp:" + std::to_string(j)).f);
    const double rel = std::abs(v - 2.0 / j) / (2.0 / j);
    if (rel > worst) worst = rel, worst_j = j;
  }
  c.less("max relative error over j<=32 (worst j=" + std::to_string(worst_j) + ")", worst, 1e-6);
  c.runtime("runtime under 5 s", seconds_since(t0), 5.0);
}

void criterion_2(Checks& c) {
  for (double a : {0.25, 0.5, 0.75}) {
    const std::string name = "osc:" + format_number(a);
    const double v = alexiewicz_norm(catalog(name).f);
    const double exact = std::pow(kPi, 1.0 - a) / (1.0 - a);
    c.less(name + " relative error", std::abs(v - exact) / exact, 1e-5);
  }
}

void criterion_3(Checks& c) {
  for (const auto& name : catalog_test_set()) {
    const auto rows = growth_report(catalog(name).f, cached_coeffs(name, 64));
    double violations = 0.0;
    for (const auto& r : rows) violations += r.ok ? 0.0 : 1.0;
    c.add(name + " bound violations for 1<=|n|<=64", violations, "==", 0.0, violations == 0.0);
  }
}

void criterion_4(Checks& c) {
  for (const auto& name : catalog_test_set()) {
    const FourierCoeffs& fc = cached_coeffs(name, 64);
    const double lo = std::max(std::abs(fc[4]), std::abs(fc[-4])) / 4.0;
    const double hi = std::max(std::abs(fc[64]), std::abs(fc[-64])) / 64.0;
    c.ratio(name + " (|f^(64)|/64) / (|f^(4)|/4)", hi, lo, 0.2);
  }
}

void criterion_5(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* f : {"exp:1", "xsin", "osc:0.5"}) {
    for (const char* g : {"indicator", "tent", "one-plus-cos"}) {
      const auto rep = convolution_theorem_check(catalog(f).f, bv_catalog(g), 16);
      c.less(std::string(f) + " * " + g + " max gap |n|<=16", rep.max_gap, 1e-5);
    }
  }
  c.runtime("runtime under 60 s", seconds_since(t0), 60.0);
}

void criterion_6(Checks& c) {
  for (const auto& f : catalog_test_set()) {
    for (const auto& g : bv_test_set()) {
      const HolderReport h = holder_check(catalog(f).f, bv_catalog(g));
      const double slack = std::min(h.mid - h.lhs, h.rhs - h.mid);
      c.add(f + " x " + g + " slack", slack, "holds", 1.0, h.holds);
    }
  }
}

void criterion_7(Checks& c) {
  double top = 0.0, gap = 0.0;
  for (int n = 0; n <= 64; ++n) {
    const DirichletNorm d = dirichlet_alexiewicz_norm(n);
    top = std::max(top, d.quadrature);
    gap = std::max(gap, std::abs(d.quadrature - d.closed_form));
  }
  c.at_most("max ||D_n||_T over n<=64", top, 4.0 * kPi);
  c.less("max |quadrature - closed form|", gap, 1e-6);
}

void criterion_8(Checks& c) {
  for (int n : {64, 128}) {
    const double r = dirichlet_lebesgue_constant(n) / std::log(static_cast<double>(n));
    c.add("n=" + std::to_string(n) + " ||D_n||_1 / log n", r, "in", std::string("[0.3 0.5]"),
          r >= 0.3 && r <= 0.5);
  }
}

void criterion_9(Checks& c) {
  for (const auto& name : catalog_test_set()) {
    const CatalogEntry e = catalog(name);
    const auto rows = approximation_sweep(e.f, cached_coeffs(name, 128), KernelKind::fejer, {4, 128});
    c.ratio(name + " ||s_128 f - f|| / ||s_4 f - f||", rows[1].distance, rows[0].distance, 0.1);
  }
}

void criterion_10(Checks& c) {
  for (const auto& name : catalog_test_set()) {
    const CatalogEntry e = catalog(name);
    if (!e.lebesgue) continue;
    const auto rows =
        approximation_sweep(e.f, cached_coeffs(name, 128), KernelKind::dirichlet, {8, 128});
    c.ratio(name + " ||S_128 f - f|| / ||S_8 f - f||", rows[1].distance, rows[0].distance, 0.2);
  }
}

void criterion_11(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n : {32, 64, 128}) {
    const DivergenceReport d = divergence_construction(n);
    const double bound = 0.5 * std::log(static_cast<double>(n));
    c.add("n=" + std::to_string(n) + " osc(D_2n * F_2n)", d.osc, ">=", bound, d.osc >= bound);
    c.less("n=" + std::to_string(n) + " | ||F'_2n|| - 2 |", std::abs(d.norm - 2.0), 1e-6);
  }
  c.runtime("runtime under 120 s", seconds_since(t0), 120.0);
}

void criterion_12(Checks& c) {
  const std::pair<double, double> spans[] = {{0.0, 1.0}, {-1.0, 1.0}, {-3.0, 2.5}};
  for (const char* f : {"exp:2", "xsin", "osc:0.5"}) {
    for (const char* g : {"indicator", "cos:2", "tent"}) {
      for (auto [a, b] : spans) {
        const FubiniReport r = fubini_check(catalog(f).f, bv_catalog(g), a, b);
        c.less(std::string(f) + " x " + g + " on [" + format_number(a) + "," + format_number(b) +
                   "]",
               r.gap, 1e-6);
      }
    }
  }
}

void criterion_13(Checks& c) {
  for (const auto& f : catalog_test_set()) {
    const Distribution d = catalog(f).f;
    const FourierCoeffs& fc = cached_coeffs(f, 128);
    for (const auto& g : bv_test_set()) {
      const BVFunction gb = bv_catalog(g);
      const ParsevalSum p = parseval_sum(fc, gb, 128, integrate_product(d, gb));
      c.less(f + " x " + g + " gap at n=128", p.gap, 1e-3);
    }
  }
  const ParsevalSum one = parseval_sum(catalog("const1").f, BVFunction::constant(1.0), 128);
  c.less("const1 x 1 |sum - 2pi|", std::abs(one.value - kTwoPi), 1e-12);
  c.less("const1 x 1 |target - 2pi|", std::abs(one.target - kTwoPi), 1e-12);
}

void criterion_14(Checks& c) {
  struct Pair {
    const char* f;
    const char* g;
    bool limit;
  };
  const Pair pairs[] = {{"const1", "one-plus-cos", true},
                        {"heaviside-half-primitive", "one-plus-cos", true},
                        {"heaviside-half-primitive", "indicator", true},
                        {"xsin", "indicator", false},
                        {"osc:0.5", "indicator", false}};
  for (const auto& p : pairs) {
    const auto rep = fejer_lemma_sweep(catalog(p.f).f, bv_catalog(p.g), {2, 64});
    const std::string label = std::string(p.f) + " x " + p.g;
    c.ratio(label + " (I_64/64) / (I_2/2)", rep.rows[1].over_n, rep.rows[0].over_n, 0.05);
    if (p.limit) {
      c.less(label + " |I_64 - f^(0)g^(0)/2pi|", std::abs(rep.rows[1].integral - rep.limit), 1e-3);
    }
  }
}

void criterion_15(Checks& c) {
  for (const auto& name : bv_test_set()) {
    const BVFunction g = bv_catalog(name);
    std::vector<Complex> a;
    for (int k = -64; k <= 64; ++k) a.push_back(g.fourier(k));
    const double bound = variation(g).bv_norm + 0.05;
    const auto rep = bv_coefficient_test(FourierCoeffs(64, a), bound, 64);
    c.at_most(name + " max_n<=64 ||s_n[S]||_BV", rep.max_bv_norm, bound);
  }
}

void criterion_16(Checks& c) {
  auto config = [](std::string cmd) {
    ExperimentConfig cfg;
    cfg.command = std::move(cmd);
    return cfg;
  };
  std::vector<ExperimentConfig> configs;
  configs.push_back(config("acceptance"));
  configs.back().criterion = 2;
  configs.push_back(config("acceptance"));
  configs.back().criterion = 7;
  configs.push_back(config("norm"));
  configs.back().f = "cantor";
  configs.push_back(config("coeffs"));
  configs.back().f = "xsin";
  configs.back().N = 8;
  configs.push_back(config("fubini-check"));
  configs.back().f = "xsin";
  for (const auto& cfg : configs) {
    const std::string first = run(cfg).table.body();
    const std::string second = run(cfg).table.body();
    std::string label = cfg.command;
    if (cfg.command == "acceptance") label += " --criterion " + std::to_string(cfg.criterion);
    else label += " --f " + cfg.f;
    c.add(label + " identical bodies", first == second ? 1.0 : 0.0, "==", 1.0, first == second);
  }
}

using Runner = void (*)(Checks&);

struct Criterion {
  const char* title;
  Runner run;
};

const Criterion kCriteria[kCriterionCount] = {
    {"Alexiewicz norm of e_j equals 2/j", criterion_1},
    {"osc:alpha norms equal pi^(1-alpha)/(1-alpha)", criterion_2},
    {"coefficient growth bounds", criterion_3},
    {"coefficients are o(n)", criterion_4},
    {"convolution theorem", criterion_5},
    {"Holder chain", criterion_6},
    {"Dirichlet kernel norm at most 4pi", criterion_7},
    {"Dirichlet L1 growth like log n", criterion_8},
    {"Fejer means converge in norm", criterion_9},
    {"partial sums converge for L1 entries", criterion_10},
    {"divergence construction", criterion_11},
    {"Fubini equality", criterion_12},
    {"Parseval with Cesaro weights", criterion_13},
    {"Fejer lemma", criterion_14},
    {"BV characterization of Cesaro means", criterion_15},
    {"determinism of CSV bodies", criterion_16},
};

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) return "unknown";
  return kCriteria[id - 1].title;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw UsageError("criterion must lie in 1..16");
  const auto t0 = std::chrono::steady_clock::now();
  Checks checks;
  kCriteria[id - 1].run(checks);
  CriterionResult r;
  r.id = id;
  r.title = kCriteria[id - 1].title;
  r.pass = checks.pass();
  r.table = checks.take();
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace torus::cli
