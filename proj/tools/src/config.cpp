#include "torus_cli/config.hpp"

#include <algorithm>
#include <cstdlib>

#include "torus/bv.hpp"
#include "torus/catalog.hpp"
#include "torus/errors.hpp"
#include "torus/kernels.hpp"

namespace torus::cli {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "coeffs",   "norm",        "convolve", "kernel-sweep", "dirichlet-bound", "divergence",
      "parseval", "fejer-lemma", "bv-test",  "fubini-check", "acceptance"};
  return names;
}

nlohmann::json ExperimentConfig::to_json() const {
  return {{"command", command}, {"f", f},         {"g", g},           {"kernel", kernel},
          {"N", N},             {"n", n},         {"n_max", n_max},   {"ns", ns},
          {"grid", grid},       {"tol", tol},     {"a", a},           {"b", b},
          {"bound", bound},     {"deltas", deltas}, {"points", points}, {"criterion", criterion},
          {"output", output}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  ExperimentConfig c;
  const nlohmann::json known = c.to_json();
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.contains(it.key())) throw UsageError("unknown config key '" + it.key() + "'");
  }
  auto take = [&j](const char* key, auto& field) {
    if (!j.contains(key)) return;
    try {
      j.at(key).get_to(field);
    } catch (const nlohmann::json::exception&) {
      throw UsageError(std::string("config key '") + key + "' has the wrong type");
    }
  };
  take("command", c.command);
  take("f", c.f);
  take("g", c.g);
  take("kernel", c.kernel);
  take("N", c.N);
  take("n", c.n);
  take("n_max", c.n_max);
  take("ns", c.ns);
  take("grid", c.grid);
  take("tol", c.tol);
  take("a", c.a);
  take("b", c.b);
  take("bound", c.bound);
  take("deltas", c.deltas);
  take("points", c.points);
  take("criterion", c.criterion);
  take("output", c.output);
  return c;
}

ExperimentConfig resolve_config(const nlohmann::json& file, int env_grid,
                                const nlohmann::json& flags) {
  nlohmann::json j = file.is_null() ? nlohmann::json::object() : file;
  if (!j.is_object() || !flags.is_object()) throw UsageError("config must be a JSON object");
  if (env_grid > 0 && !j.contains("grid")) j["grid"] = env_grid;
  for (auto it = flags.begin(); it != flags.end(); ++it) j[it.key()] = it.value();
  return config_from_json(j);
}

int grid_from_env() {
  const char* v = std::getenv("TORUS_CPI_GRID");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  const long g = std::strtol(v, &end, 10);
  if (*end != '\0' || g < 2 || g > (1L << 24)) {
    throw UsageError(std::string("TORUS_CPI_GRID must be an integer in [2, 2^24], got '") + v + "'");
  }
  return static_cast<int>(g);
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

void need_catalog(const std::string& name) {
  try {
    (void)catalog(name);
  } catch (const torus::LookupError& e) {
    throw UsageError(std::string(e.what()) + "; catalog: " + join(catalog_names()));
  } catch (const torus::DomainError& e) {
    throw UsageError(e.what());
  }
}

void need_bv(const std::string& name) {
  try {
    (void)bv_catalog(name);
  } catch (const std::exception& e) {
    throw UsageError(std::string(e.what()) +
                     "; multipliers: indicator, const:<c>, sin, cos:<k>, tent, one-plus-cos");
  }
}

void positive(const char* name, double v) {
  if (!(v > 0.0)) throw UsageError(std::string(name) + " must be positive");
}

}  // namespace

void validate(const ExperimentConfig& c) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) {
    throw UsageError("unknown command '" + c.command + "'; commands: " + join(names));
  }
  positive("N", c.N);
  positive("n", c.n);
  positive("n_max", c.n_max);
  positive("tol", c.tol);
  positive("points", c.points);
  if (c.grid < 0) throw UsageError("grid must be positive");
  if (c.bound < 0.0) throw UsageError("bound must be positive");
  for (int n : c.ns) positive("every entry of ns", n);
  for (double d : c.deltas) {
    if (!(d > 0.0 && d <= 3.141592653589793)) throw UsageError("deltas must lie in (0, pi]");
  }
  const std::string& cmd = c.command;
  if (cmd == "coeffs" || cmd == "norm" || cmd == "convolve" || cmd == "parseval" ||
      cmd == "fejer-lemma" || cmd == "fubini-check") {
    need_catalog(c.f);
  }
  if (cmd == "convolve" || cmd == "parseval" || cmd == "fejer-lemma" || cmd == "fubini-check" ||
      (cmd == "bv-test" && c.g != "abs-plus-one")) {
    need_bv(c.g);
  }
  if (cmd == "kernel-sweep") {
    try {
      (void)parse_kernel_kind(c.kernel);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  if (cmd == "fubini-check" && !(c.a < c.b)) throw UsageError("fubini-check needs a < b");
  if (cmd == "acceptance" && (c.criterion < 1 || c.criterion > 16)) {
    throw UsageError("acceptance needs --criterion between 1 and 16");
  }
}

}  // namespace torus::cli
