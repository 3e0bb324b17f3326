#pragma once

#include <string>
#include <vector>

#include "remo/building.hpp"
#include "remo/random.hpp"

namespace remo::testing {

// Builds from 1-based element lists over ground {1, ..., n}.
BuildingSet make(int n, const std::vector<std::vector<int>>& blocks);
Block blk(const std::vector<int>& one_based);

BuildingSet b0();
BuildingSet b1();
BuildingSet b2();
BuildingSet b3();
BuildingSet b4();
BuildingSet b5prime();

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

struct Named {
  std::string name;
  BuildingSet building;
};

// Fixtures plus graphical building sets of small paths, cycles, stars and
// complete graphs.
std::vector<Named> corpus();

// `count` random intersection-closed building sets on 3 to `max_n` elements.
std::vector<BuildingSet> random_closed_sets(std::uint64_t seed, int count, int max_n);

}  // namespace remo::testing
