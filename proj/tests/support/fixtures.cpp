#include "fixtures.hpp"

#include <algorithm>

namespace remo::testing {

Block blk(const std::vector<int>& one_based) {
  Block b;
  for (int i : one_based) b = b | Block::singleton(i - 1);
  return b;
}

BuildingSet make(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Block> out;
  for (const auto& b : blocks) out.push_back(blk(b));
  return make_building_set(GroundSet::range(n), out);
}

namespace {

BuildingSet all_but(int n, const std::vector<std::vector<int>>& excluded) {
  std::vector<Block> drop;
  for (const auto& e : excluded) drop.push_back(blk(e));
  std::vector<Block> blocks;
  for (Block::Mask m = 1; m < (Block::Mask{1} << n); ++m) {
    if (std::find(drop.begin(), drop.end(), Block(m)) == drop.end()) blocks.emplace_back(m);
  }
  return make_building_set(GroundSet::range(n), blocks);
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(GroundSet::range(n), edges);
}

}  // namespace

BuildingSet b0() { return all_but(4, {}); }
BuildingSet b1() { return all_but(4, {{1, 3}}); }
BuildingSet b2() { return all_but(4, {{1, 3}, {1, 4}, {1, 3, 4}}); }
BuildingSet b3() { return make(5, {{1}, {2}, {3}, {4}, {5}, {1, 2, 3}, {1, 3, 4, 5}, {1, 2, 3, 4, 5}}); }
BuildingSet b4() { return make(5, {{1}, {2}, {3}, {4}, {5}, {1, 2, 3, 4}, {3, 4, 5}, {1, 2, 3, 4, 5}}); }
BuildingSet b5prime() { return make(3, {{1}, {2}, {3}, {1, 2}, {1, 2, 3}}); }

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edges(n, e);
}

std::vector<Named> corpus() {
  std::vector<Named> out{{"B0", b0()}, {"B1", b1()}, {"B2", b2()}, {"B3", b3()}, {"B4", b4()}, {"B5'", b5prime()}};
  for (int n : {3, 4, 5}) out.push_back({"P" + std::to_string(n), graphical_building_set(path_graph(n))});
  for (int n : {4, 5, 6}) out.push_back({"C" + std::to_string(n), graphical_building_set(cycle_graph(n))});
  out.push_back({"K5", graphical_building_set(complete_graph(5))});
  out.push_back({"star4", graphical_building_set(Graph(GroundSet::range(5), std::vector<std::pair<int, int>>{
                                                           {0, 1}, {0, 2}, {0, 3}, {0, 4}}))});
  return out;
}

std::vector<BuildingSet> random_closed_sets(std::uint64_t seed, int count, int max_n) {
  Rng rng(seed);
  std::uniform_int_distribution<int> size(3, max_n);
  std::uniform_int_distribution<int> seeds(0, 6);
  std::vector<BuildingSet> out;
  for (int i = 0; i < count; ++i) out.push_back(random_building_set(rng, size(rng), seeds(rng), true));
  return out;
}

}  // namespace remo::testing
