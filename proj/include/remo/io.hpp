#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "remo/minkowski.hpp"
#include "remo/oracle.hpp"

namespace remo {

using Json = nlohmann::ordered_json;

// {"ground": ["1","2",...], "blocks": [["1"],["1","2"],...]}. Throws
// ParseError with a line:column or JSON-pointer position, or the
// building-set validation error.
BuildingSet parse_building_set(std::string_view text);

// First line: whitespace-separated vertex names; each further nonblank line
// "u v" is an edge. Throws ParseError with line:column positions.
Graph parse_graph(std::string_view text);

Json block_to_json(const GroundSet& ground, Block b);
Json building_set_to_json(const BuildingSet& b);
Json nested_to_json(const GroundSet& ground, const NestedSet& n);      // {"nested": [...]}
Json tree_to_json(const GroundSet& ground, const BTree& t);             // {"label": [...], "children": [...]}
Json point_to_json(const RationalPoint& p);                             // ["1", "2/3", ...]
Json hrep_to_json(const HPolytope& p);                                  // {"sum": ..., "constraints": [...]}
Json vrep_to_json(const GroundSet& ground, const VertexSet& v, const std::vector<TreeVertex>& trees);
Json weights_to_json(const MinkowskiWeights& w);                        // {"weights": [...]}
Json flip_certificate_to_json(const GroundSet& ground, const FlipCertificate& c);

// "2 Δ_{1,2,3} + Δ_{1,2} + Δ_{1}": summands by decreasing size, then
// lexicographically; unit weights are left implicit.
std::string minkowski_expression(const MinkowskiWeights& w);

}  // namespace remo
