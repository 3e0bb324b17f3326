#include "remo/random.hpp"

#include <set>

namespace remo {

Graph random_connected_graph(Rng& rng, int vertices, double density) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> present;
  for (int v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int u = pick(rng);
    edges.emplace_back(u, v);
    present.emplace(u, v);
  }
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (!present.count({u, v}) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(GroundSet::range(vertices), edges);
}

BuildingSet random_building_set(Rng& rng, int n, int seeds, bool intersection_closed) {
  const Block full = Block::full(n);
  std::set<Block> blocks{full};
  for (int i = 0; i < n; ++i) blocks.insert(Block::singleton(i));
  std::uniform_int_distribution<Block::Mask> pick(1, full.bits());
  for (int i = 0; i < seeds; ++i) blocks.insert(Block(pick(rng)));
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Block> current(blocks.begin(), blocks.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const Block a = current[i], b = current[j];
        if (!a.intersects(b)) continue;
        changed |= blocks.insert(a | b).second;
        if (intersection_closed) changed |= blocks.insert(a & b).second;
      }
    }
  }
  return make_building_set(GroundSet::range(n), {blocks.begin(), blocks.end()});
}

}  // namespace remo
