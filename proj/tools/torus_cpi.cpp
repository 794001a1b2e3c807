#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "torus_cli/commands.hpp"
#include "torus_cli/config.hpp"

using namespace torus::cli;

int main(int argc, char** argv) {
  CLI::App app{"Experiments with the continuous primitive integral on the torus"};
  app.set_version_flag("--version", std::string(TORUS_CPI_VERSION));

  std::string command, config_path;
  std::optional<std::string> f, g, kernel, output;
  std::optional<int> N, n, n_max, grid, points, criterion;
  std::optional<double> tol, a, b, bound;
  std::optional<std::vector<int>> ns;
  std::optional<std::vector<double>> deltas;

  std::string listing;
  for (const auto& c : command_names()) listing += (listing.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + listing)->required();
  app.add_option("--config", config_path, "JSON config; flags override its keys");
  app.add_option("--f", f, "Catalog distribution, e.g. exp:4, osc:0.5, xsin");
  app.add_option("--g", g, "BV multiplier, e.g. indicator, cos:2, tent");
  app.add_option("--kernel", kernel, "fejer, dirichlet or vallee-poussin");
  app.add_option("--N", N, "Coefficient window");
  app.add_option("--n", n, "Single index");
  app.add_option("--n-max", n_max, "Largest index of a sweep");
  app.add_option("--ns", ns, "Index list")->delimiter(',');
  app.add_option("--grid", grid, "Starting norm grid (intervals per period)");
  app.add_option("--tol", tol, "Tolerance");
  app.add_option("--a", a, "Left endpoint");
  app.add_option("--b", b, "Right endpoint");
  app.add_option("--bound", bound, "Bound for bv-test (default ||g||_BV + 0.05)");
  app.add_option("--deltas", deltas, "Tail cutoffs for kernel-sweep")->delimiter(',');
  app.add_option("--points", points, "Sample count for convolve");
  app.add_option("--criterion", criterion, "Acceptance criterion 1..16");
  app.add_option("-o,--output", output, "Output CSV path; stdout when absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    nlohmann::json file;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot read config file " + config_path);
      file = nlohmann::json::parse(in);
    }
    nlohmann::json flags{{"command", command}};
    auto put = [&flags](const char* key, const auto& v) {
      if (v) flags[key] = *v;
    };
    put("f", f);
    put("g", g);
    put("kernel", kernel);
    put("output", output);
    put("N", N);
    put("n", n);
    put("n_max", n_max);
    put("grid", grid);
    put("points", points);
    put("criterion", criterion);
    put("tol", tol);
    put("a", a);
    put("b", b);
    put("bound", bound);
    put("ns", ns);
    put("deltas", deltas);
    return execute(resolve_config(file, grid_from_env(), flags), std::cout, std::cerr);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: bad config: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}
