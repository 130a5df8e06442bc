#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "graphonlab/graphing.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/group.hpp"
#include "graphonlab/metrics.hpp"
#include "graphonlab/symmetry.hpp"

namespace glab {

// JSON schemas:
//   Graphon   {"weights":[...], "kernel":[[...]], "signed":bool, "coords":[[...]]?}
//   GroupModel{"kind":"cyclic"|"torus"|"table", ...params}
//   Morphism  {"source":{...}, "target":{...}, "map":[...]}
//   PermGroup {"order":int, "generators":[[...],...]}
//   Purity    {"separated":bool, "min_rw":float, "full_support":bool}
//   Graphing  {"weights":[...], "edges":[[i,j],...], "D":int}
// Floats round-trip exactly (shortest-representation serialization).

nlohmann::json graphon_to_json(const Graphon& g);
Graphon graphon_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const GroupModel& G);
GroupModel group_from_json(const nlohmann::json& j);

nlohmann::json morphism_to_json(const GroupMorphism& phi);
GroupMorphism morphism_from_json(const nlohmann::json& j);

nlohmann::json permutation_group_to_json(const PermutationGroup& P);

nlohmann::json purity_to_json(const PurityReport& r);

nlohmann::json graphing_to_json(const FiniteGraphing& g);
FiniteGraphing graphing_from_json(const nlohmann::json& j);

/// Shortest-round-trip decimal formatting for CSV output.
std::string format_double(double x);

}  // namespace glab
