#pragma once

#include <string>

#include "torus_cli/table.hpp"

namespace torus::cli {

inline constexpr int kCriterionCount = 16;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  ResultTable table;  // check, value, relation, bound, pass
};

std::string criterion_title(int id);
CriterionResult run_criterion(int id);

}  // namespace torus::cli
