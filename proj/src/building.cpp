#include "remo/building.hpp"

#include <algorithm>

#include "remo/errors.hpp"

namespace remo {

std::vector<Block> BuildingSet::proper_blocks() const {
  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (Block b : blocks_) {
    if (b != full()) out.push_back(b);
  }
  return out;
}

BuildingSet make_building_set(GroundSet ground, std::vector<Block> blocks) {
  const Block full = ground.full();
  for (Block b : blocks) {
    if (b.empty()) throw Error(ErrorCode::EmptyBlock, "blocks must be nonempty");
    if (!b.subset_of(full)) throw Error(ErrorCode::ElementNotInGround, "block references an element outside the ground set");
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());

  std::vector<bool> lookup(std::size_t{1} << ground.size(), false);
  for (Block b : blocks) lookup[b.bits()] = true;

  for (int i = 0; i < ground.size(); ++i) {
    if (!lookup[Block::singleton(i).bits()]) {
      throw Error(ErrorCode::MissingSingleton, "singleton {" + ground.name(i) + "} is not a block",
                  {Block::singleton(i)});
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const Block a = blocks[i], c = blocks[j];
      if (a.intersects(c) && !lookup[(a | c).bits()]) {
        throw Error(ErrorCode::UnionMissing,
                    "union of " + ground.format(a) + " and " + ground.format(c) + " is not a block", {a, c});
      }
    }
  }
  if (!lookup[full.bits()]) {
    throw Error(ErrorCode::NotConnected, "the ground set is not a block");
  }

  BuildingSet out;
  for (std::size_t i = 0; i < blocks.size() && !out.intersection_witness_; ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const Block meet = blocks[i] & blocks[j];
      if (!meet.empty() && !lookup[meet.bits()]) {
        out.intersection_witness_ = BlockPair{blocks[i], blocks[j]};
        break;
      }
    }
  }
  out.ground_ = std::move(ground);
  out.blocks_ = std::move(blocks);
  out.lookup_ = std::move(lookup);
  return out;
}

Graph::Graph(GroundSet vertices, std::span<const std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), adjacency_(static_cast<std::size_t>(vertices_.size()), 0) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n() || v >= n()) {
      throw Error(ErrorCode::ElementNotInGround, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at " + vertices_.name(u));
    adjacency_[static_cast<std::size_t>(u)] |= Block::singleton(v).bits();
    adjacency_[static_cast<std::size_t>(v)] |= Block::singleton(u).bits();
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u) {
    neighbours(u).for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

bool Graph::induces_connected(Block subset) const {
  if (subset.empty()) return false;
  Block seen = Block::singleton(subset.first());
  Block frontier = seen;
  while (!frontier.empty()) {
    Block next;
    frontier.for_each([&](int v) { next = next | (neighbours(v) & subset); });
    frontier = next - seen;
    seen = seen | frontier;
  }
  return seen == subset;
}

BuildingSet graphical_building_set(const Graph& g) {
  if (!g.connected()) throw Error(ErrorCode::NotConnected, "graph is not connected");
  std::vector<Block> blocks;
  const Block::Mask top = g.vertices().full().bits();
  for (Block::Mask m = 1; m <= top; ++m) {
    if (g.induces_connected(Block(m))) blocks.emplace_back(m);
  }
  return make_building_set(g.vertices(), std::move(blocks));
}

IntersectionReport is_closed_under_intersection(const BuildingSet& b) {
  return IntersectionReport{b.closed_under_intersection(), b.intersection_witness()};
}

bool is_chordful(const Graph& g) { return graphical_building_set(g).closed_under_intersection(); }

Block b_hull(const BuildingSet& b, Block r) {
  if (!b.closed_under_intersection()) {
    throw Error(ErrorCode::NotIntersectionClosed, "B-hulls need a building set closed under intersection");
  }
  if (r.empty() || !r.subset_of(b.full())) {
    throw Error(ErrorCode::InvalidArgument, "hull argument must be a nonempty subset of the ground set");
  }
  Block hull = b.full();
  for (Block c : b.blocks()) {
    if (r.subset_of(c)) hull = hull & c;
  }
  return hull;
}

Block b_path(const BuildingSet& b, int s, int t) {
  return b_hull(b, Block::singleton(s) | Block::singleton(t));
}

std::vector<Block> all_b_paths(const BuildingSet& b) {
  std::vector<Block> out;
  for (int s = 0; s < b.n(); ++s) {
    for (int t = s; t < b.n(); ++t) out.push_back(b_path(b, s, t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GeneratingReport is_generating(const BuildingSet& b, std::span<const Block> s) {
  for (Block c : s) {
    if (!b.contains(c)) {
      throw Error(ErrorCode::BlockNotInBuildingSet, b.ground().format(c) + " is not a block", {c});
    }
  }
  for (Block big : b.blocks()) {
    for (int x : big.indices()) {
      Block cover;
      for (Block c : s) {
        if (c.contains(x) && c.subset_of(big)) cover = cover | c;
      }
      if (cover != big) return GeneratingReport{false, std::pair{big, x}};
    }
  }
  return {};
}

}  // namespace remo
