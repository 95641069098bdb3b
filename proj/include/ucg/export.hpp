#pragma once

#include <string>

#include <json.hpp>

#include "ucg/graph.hpp"

namespace ucg {

/// `graph "<name>" { ... }` with one node per vertex labelled by its decoded name.
std::string to_dot(const CayleyGraph& g, const std::string& name);
/// `source,target` header then one line per edge, source < target, ids only.
std::string to_csv(const CayleyGraph& g);

/// An ExtNat as a JSON number, or the string "inf".
nlohmann::json to_json(const ExtNat& v);
/// Fields {connected, diameter, girth, omega, alpha, degree_min, degree_max,
/// regular}; null when not requested, "skipped" when a guard stopped a solver.
nlohmann::json to_json(const InvariantReport& r);

}  // namespace ucg
