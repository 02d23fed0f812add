#pragma once

#include <json.hpp>

#include "absfact/geometry.hpp"
#include "absfact/pipeline.hpp"
#include "absfact/poly.hpp"

namespace absfact {

// Structured output schema, versioned via the top-level "schema" field.
// Polynomial terms serialize as [e1, e2, re, im], sorted by exponent.
inline constexpr int kSchemaVersion = 1;

nlohmann::json poly_to_json(const SparsePoly& f);
nlohmann::json polytope_to_json(const LatticePolytope& P);
nlohmann::json fan_to_json(const Fan& fan);
nlohmann::json report_to_json(const FactorReport& report);

}  // namespace absfact
