#pragma once

#include <json.hpp>

#include "minkdec/polytope.hpp"
#include "minkdec/ycoeffs.hpp"
#include "minkdec/zvalues.hpp"

namespace minkdec {

// Tables serialize with subsets as ascending integer lists in canonical
// (size, lexicographic) order and rationals as canonical fraction strings.

nlohmann::ordered_json to_json(const ZTable& table);
ZTable ztable_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const YTable& table);

// Facet spec file: {"n":..,"up":[..],"total":"..","entries":[{"set":[..],"z":".."}]}
// Entries must cover exactly the facet sets.
nlohmann::ordered_json to_json(const FacetZSpec& spec);
FacetZSpec facet_spec_from_json(const nlohmann::json& j);

nlohmann::ordered_json vertices_to_json(const VPolytope& P);

}  // namespace minkdec
