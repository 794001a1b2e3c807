#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace torus::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& command_names();

struct ExperimentConfig {
  std::string command;
  std::string f = "const1";      // catalog name
  std::string g = "indicator";   // BV catalog name
  std::string kernel = "fejer";
  int N = 16;                    // coefficient window
  int n = 128;                   // single index
  int n_max = 64;
  std::vector<int> ns;           // explicit index list; empty uses the command default
  int grid = 0;                  // norm starting grid; 0 uses the library default
  double tol = 1e-6;
  double a = 0.0;
  double b = 1.0;
  double bound = 0.0;            // bv-test bound; 0 uses ||g||_BV + 0.05
  std::vector<double> deltas{0.1, 0.5};
  int points = 256;              // convolve sample count
  int criterion = 0;
  std::string output;            // empty or "-" writes to stdout

  nlohmann::json to_json() const;
};

/// Missing keys keep their defaults; unknown keys are a usage error.
ExperimentConfig config_from_json(const nlohmann::json& j);

/// Layers a config file, the environment grid and command-line flags, in
/// increasing precedence. env_grid = 0 means unset.
ExperimentConfig resolve_config(const nlohmann::json& file, int env_grid, const nlohmann::json& flags);

/// Reads TORUS_CPI_GRID; 0 when unset.
int grid_from_env();

/// Checks positivity and that every name the command uses resolves.
void validate(const ExperimentConfig& c);

}  // namespace torus::cli
