#pragma once

#include <random>

#include "remo/building.hpp"

namespace remo {

using Rng = std::mt19937_64;

// Random spanning tree on `vertices` nodes plus each remaining edge with
// probability `density`.
Graph random_connected_graph(Rng& rng, int vertices, double density);

// Singletons, the ground set and `seeds` random subsets, closed under unions
// of intersecting blocks (and under nonempty intersections when requested).
BuildingSet random_building_set(Rng& rng, int n, int seeds, bool intersection_closed);

}  // namespace remo
