#pragma once

#include <string>
#include <vector>

#include "torus/primitive.hpp"

namespace torus {

struct CatalogEntry {
  std::string name;
  Distribution f;
  std::string notes;
  bool lebesgue = false;  // f is (the derivative of) an absolutely continuous primitive
};

/// Named test distributions. Parametric names use "name:param", e.g. "exp:4",
/// "osc:0.5". Throws LookupError for unknown names and DomainError for bad
/// parameters.
CatalogEntry catalog(const std::string& name);

/// The base names accepted by catalog(), with parameter placeholders.
std::vector<std::string> catalog_names();

/// A representative concrete set covering every family.
std::vector<std::string> catalog_test_set();

/// x^2/4 cos(x^-4) - 1/2 int_0^x t cos(t^-4) dt on (0, pi], 0 for x <= 0.
double example36_primitive(double x);
/// int_0^x t cos(t^-4) dt for x >= 0.
double example36_inner(double x);

/// Cantor function on [0, 1].
double cantor_function(double u);

}  // namespace torus
