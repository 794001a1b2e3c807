#include "torus_cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "torus/analysis.hpp"
#include "torus/catalog.hpp"
#include "torus/convolution.hpp"
#include "torus/errors.hpp"
#include "torus/kernels.hpp"
#include "torus/norms.hpp"
#include "torus_cli/acceptance.hpp"

#ifndef TORUS_CPI_VERSION
#define TORUS_CPI_VERSION "0.0.0"
#endif

namespace torus::cli {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

using Table = ResultTable;

NormOptions norm_options(const ExperimentConfig& c) {
  NormOptions o;
  o.grid = c.grid;
  return o;
}

std::vector<int> index_list(const ExperimentConfig& c, std::vector<int> fallback) {
  return c.ns.empty() ? fallback : c.ns;
}

RunResult cmd_coeffs(const ExperimentConfig& c) {
  const Distribution f = catalog(c.f).f;
  const FourierCoeffs fc = coeffs(f, c.N);
  const auto rows = growth_report(f, fc, norm_options(c));
  RunResult r{Table({"n", "re", "im", "abs", "bound_f", "bound_h", "bound_e", "ratio"})};
  int bad = 0;
  for (int n = -c.N; n <= c.N; ++n) {
    const Complex v = fc[n];
    if (n == 0) {
      r.table.add_row({0LL, v.real(), v.imag(), std::abs(v), kNan, kNan, kNan, kNan});
      continue;
    }
    const GrowthRow& g = rows[static_cast<std::size_t>(n < 0 ? n + c.N : n + c.N - 1)];
    bad += g.ok ? 0 : 1;
    r.table.add_row({static_cast<long long>(n), v.real(), v.imag(), std::abs(v), g.bound_f,
                     g.bound_h, g.bound_e, g.ratio});
  }
  if (bad) {
    r.exit_code = kInvariant;
    r.message = std::to_string(bad) + " coefficient bound violation(s)";
  }
  return r;
}

RunResult cmd_norm(const ExperimentConfig& c) {
  const Distribution f = catalog(c.f).f;
  const NormEstimate e = alexiewicz_norm_estimate(f, norm_options(c));
  const NormEstimate q = alexiewicz_norm_equiv_estimate(f, norm_options(c));
  RunResult r{Table({"value", "error", "grid", "converged", "alpha", "beta", "equiv", "drift_re",
                     "drift_im"})};
  r.table.add_row({e.value, e.error, static_cast<long long>(e.grid),
                   static_cast<long long>(e.converged), e.alpha, e.beta, q.value, f.drift().real(),
                   f.drift().imag()});
  return r;
}

RunResult cmd_convolve(const ExperimentConfig& c) {
  const PeriodicFunction h = convolve_bv(catalog(c.f).f, bv_catalog(c.g));
  RunResult r{Table({"x", "re", "im"})};
  for (int i = 0; i < c.points; ++i) {
    const double x = -kPi + kTwoPi * i / c.points;
    const Complex v = h(x);
    r.table.add_row({x, v.real(), v.imag()});
  }
  return r;
}

RunResult cmd_kernel_sweep(const ExperimentConfig& c) {
  const KernelKind kind = parse_kernel_kind(c.kernel);
  std::vector<int> ns = c.ns;
  if (ns.empty()) {
    for (int n = 1; n <= c.n_max; ++n) ns.push_back(n);
  }
  const SummabilityReport rep = validate_summability(kind, c.n_max, c.deltas, ns);
  std::vector<std::string> cols{"n", "integral", "norm_T", "norm_L1"};
  for (double d : c.deltas) cols.push_back("tail_" + format_number(d));
  RunResult r{Table(cols)};
  const double scale = kind == KernelKind::dirichlet ? 1.0 / kTwoPi : 1.0;
  for (const auto& row : rep.rows) {
    const Distribution k = scale * kernel(kind, row.n).to_distribution();
    std::vector<Cell> cells{static_cast<long long>(row.n), row.integral,
                            alexiewicz_norm_estimate(k, norm_options(c)).value, row.l1};
    for (double d : c.deltas) cells.emplace_back(row.tail.at(d));
    r.table.add_row(std::move(cells));
  }
  r.table.set_meta("integral_one", rep.integral_one ? "true" : "false");
  r.table.set_meta("l1_bounded", rep.l1_bounded ? "true" : "false");
  r.table.set_meta("l1_bound", format_number(rep.l1_bound));
  if (kind == KernelKind::dirichlet) r.table.set_meta("normalization", "D_n / 2pi");
  if (!rep.integral_one || (kind != KernelKind::dirichlet && !rep.l1_bounded)) {
    r.exit_code = kInvariant;
    r.message = "summability kernel conditions violated";
  }
  return r;
}

RunResult cmd_dirichlet_bound(const ExperimentConfig& c) {
  RunResult r{Table({"n", "norm_T", "closed_form", "norm_L1", "bound", "ratio"})};
  int bad = 0;
  for (int n = 1; n <= c.n_max; ++n) {
    const DirichletNorm d = dirichlet_alexiewicz_norm(n);
    const double l1 = dirichlet_lebesgue_constant(n);
    const double ratio = n > 1 ? l1 / std::log(static_cast<double>(n)) : kNan;
    if (d.quadrature > 4.0 * kPi || std::abs(d.quadrature - d.closed_form) > 1e-6) ++bad;
    r.table.add_row({static_cast<long long>(n), d.quadrature, d.closed_form, l1, 4.0 * kPi, ratio});
  }
  r.table.set_meta("norm_L1", "Lebesgue constant (1/2pi) int |D_n|");
  if (bad) {
    r.exit_code = kInvariant;
    r.message = std::to_string(bad) + " row(s) above 4pi or off the closed form";
  }
  return r;
}

RunResult cmd_divergence(const ExperimentConfig& c) {
  RunResult r{Table({"n", "m", "norm_T", "osc", "bound", "ratio", "value_at_zero", "value_at_pi"})};
  int bad = 0;
  for (int n : index_list(c, {32, 64, 128})) {
    const DivergenceReport d = divergence_construction(n);
    const double bound = 0.5 * std::log(static_cast<double>(n));
    if (d.osc < bound || std::abs(d.norm - 2.0) > 1e-6) ++bad;
    r.table.add_row({static_cast<long long>(n), static_cast<long long>(d.m), d.norm, d.osc, bound,
                     d.ratio, d.value_at_zero, d.value_at_pi});
  }
  if (bad) {
    r.exit_code = kInvariant;
    r.message = std::to_string(bad) + " row(s) below 0.5 log n or with norm != 2";
  }
  return r;
}

RunResult cmd_parseval(const ExperimentConfig& c) {
  const Distribution f = catalog(c.f).f;
  const BVFunction g = bv_catalog(c.g);
  const std::vector<int> ns = index_list(c, {8, 16, 32, 64, 128});
  int top = 0;
  for (int n : ns) top = std::max(top, n);
  const FourierCoeffs fc = coeffs(f, top);
  const Complex target = integrate_product(f, g);
  RunResult r{Table({"n", "sum_re", "sum_im", "target_re", "target_im", "gap", "printed_re",
                     "printed_im"})};
  for (int n : ns) {
    const ParsevalSum p = parseval_sum(fc, g, n, target);
    r.table.add_row({static_cast<long long>(n), p.value.real(), p.value.imag(), p.target.real(),
                     p.target.imag(), p.gap, p.printed.real(), p.printed.imag()});
  }
  r.table.set_meta("normalization",
                   "sum = (1/2pi) sum w_k f^(k) g^(-k); printed = sum w_k f^(k) g^(k), which "
                   "gives 4pi^2 instead of 2pi at f = g = 1");
  return r;
}

RunResult cmd_fejer_lemma(const ExperimentConfig& c) {
  const FejerLemmaReport rep =
      fejer_lemma_sweep(catalog(c.f).f, bv_catalog(c.g), index_list(c, {1, 2, 4, 8, 16, 32, 64}));
  RunResult r{Table({"n", "I_n_re", "I_n_im", "I_n_over_n"})};
  for (const auto& row : rep.rows) {
    r.table.add_row({static_cast<long long>(row.n), row.integral.real(), row.integral.imag(),
                     row.over_n});
  }
  r.table.set_meta("limit", format_number(rep.limit.real()) + " " + format_number(rep.limit.imag()) +
                                "i (f^(0) g^(0) / 2pi, reached when f is Lebesgue integrable)");
  return r;
}

RunResult cmd_bv_test(const ExperimentConfig& c) {
  std::vector<Complex> a;
  double bound = c.bound;
  if (c.g == "abs-plus-one") {
    for (int k = -c.n_max; k <= c.n_max; ++k) a.emplace_back(std::abs(k) + 1.0);
    if (bound == 0.0) bound = std::numeric_limits<double>::infinity();
  } else {
    const BVFunction g = bv_catalog(c.g);
    for (int k = -c.n_max; k <= c.n_max; ++k) a.push_back(g.fourier(k));
    if (bound == 0.0) bound = variation(g).bv_norm + 0.05;
  }
  const BVCoefficientReport rep = bv_coefficient_test(FourierCoeffs(c.n_max, a), bound, c.n_max);
  RunResult r{Table({"n", "sup", "variation", "bv_norm", "bound"})};
  for (const auto& row : rep.rows) {
    r.table.add_row({static_cast<long long>(row.n), row.sup, row.variation, row.bv_norm, bound});
  }
  r.table.set_meta("max_bv_norm", format_number(rep.max_bv_norm));
  if (!rep.holds) {
    r.exit_code = kInvariant;
    r.message = "Cesaro means exceed the BV bound";
  }
  return r;
}

RunResult cmd_fubini(const ExperimentConfig& c) {
  const FubiniReport rep = fubini_check(catalog(c.f).f, bv_catalog(c.g), c.a, c.b, c.tol);
  RunResult r{Table({"a", "b", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "gap"})};
  r.table.add_row({rep.a, rep.b, rep.lhs.real(), rep.lhs.imag(), rep.rhs.real(), rep.rhs.imag(),
                   rep.gap});
  if (!rep.ok) {
    r.exit_code = kInvariant;
    r.message = "Fubini gap " + format_number(rep.gap) + " above tol " + format_number(c.tol);
  }
  return r;
}

RunResult cmd_acceptance(const ExperimentConfig& c) {
  CriterionResult cr = run_criterion(c.criterion);
  RunResult r{std::move(cr.table)};
  r.table.set_meta("criterion", std::to_string(cr.id) + " " + cr.title);
  if (!cr.pass) {
    r.exit_code = kInvariant;
    r.message = "criterion " + std::to_string(cr.id) + " failed";
  }
  return r;
}

RunResult dispatch(const ExperimentConfig& c) {
  const std::string& cmd = c.command;
  if (cmd == "coeffs") return cmd_coeffs(c);
  if (cmd == "norm") return cmd_norm(c);
  if (cmd == "convolve") return cmd_convolve(c);
  if (cmd == "kernel-sweep") return cmd_kernel_sweep(c);
  if (cmd == "dirichlet-bound") return cmd_dirichlet_bound(c);
  if (cmd == "divergence") return cmd_divergence(c);
  if (cmd == "parseval") return cmd_parseval(c);
  if (cmd == "fejer-lemma") return cmd_fejer_lemma(c);
  if (cmd == "bv-test") return cmd_bv_test(c);
  if (cmd == "fubini-check") return cmd_fubini(c);
  if (cmd == "acceptance") return cmd_acceptance(c);
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

RunResult run(const ExperimentConfig& config) {
  validate(config);
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r = dispatch(config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ResultTable& t = r.table;
  const auto extra = t.metadata();
  t.clear_meta();
  t.set_meta("command", config.command);
  t.set_meta("config", config.to_json().dump());
  t.set_meta("version", TORUS_CPI_VERSION);
  t.set_meta("wall_time_s", format_number(std::round(secs * 1000.0) / 1000.0));
  for (const auto& [k, v] : extra) t.set_meta(k, v);
  t.set_meta("status", r.exit_code == kOk ? "ok" : "invariant-failure: " + r.message);
  return r;
}

int execute(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  RunResult r;
  try {
    r = run(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const torus::LookupError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const torus::DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const torus::ToleranceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kInvariant;
  } catch (const torus::ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kInvariant;
  }
  const std::string text = r.table.csv();
  if (config.output.empty() || config.output == "-") {
    out << text;
  } else {
    write_atomic(config.output, text);
  }
  if (r.exit_code != kOk) err << r.message << '\n';
  return r.exit_code;
}

}  // namespace torus::cli
