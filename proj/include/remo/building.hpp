#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "remo/block.hpp"

namespace remo {

using BlockPair = std::pair<Block, Block>;

// A validated connected building set: contains every singleton, the union of
// two intersecting blocks is a block, and the ground set is the unique
// maximal block. Immutable after construction.
class BuildingSet {
 public:
  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Block full() const { return ground_.full(); }

  // All blocks in lexicographic order, the full ground set included.
  const std::vector<Block>& blocks() const { return blocks_; }
  // Blocks other than the ground set.
  std::vector<Block> proper_blocks() const;
  bool contains(Block b) const { return b.bits() < lookup_.size() && lookup_[b.bits()]; }

  bool closed_under_intersection() const { return !intersection_witness_; }
  // Lexicographically first pair whose nonempty intersection is not a block.
  const std::optional<BlockPair>& intersection_witness() const { return intersection_witness_; }

  friend BuildingSet make_building_set(GroundSet ground, std::vector<Block> blocks);

 private:
  BuildingSet() = default;

  GroundSet ground_;
  std::vector<Block> blocks_;
  std::vector<bool> lookup_;
  std::optional<BlockPair> intersection_witness_;
};

// Validates and deduplicates. Errors: EmptyBlock, ElementNotInGround,
// MissingSingleton, UnionMissing (witness pair), NotConnected.
BuildingSet make_building_set(GroundSet ground, std::vector<Block> blocks);

// Simple undirected graph over a ground set; adjacency stored as masks.
class Graph {
 public:
  Graph(GroundSet vertices, std::span<const std::pair<int, int>> edges);

  const GroundSet& vertices() const { return vertices_; }
  int n() const { return vertices_.size(); }
  Block neighbours(int v) const { return Block(adjacency_[static_cast<std::size_t>(v)]); }
  bool has_edge(int u, int v) const { return neighbours(u).contains(v); }
  std::vector<std::pair<int, int>> edges() const;

  // True iff the subgraph induced by `subset` is connected (and nonempty).
  bool induces_connected(Block subset) const;
  bool connected() const { return induces_connected(vertices_.full()); }

 private:
  GroundSet vertices_;
  std::vector<Block::Mask> adjacency_;
};

// Vertex sets of all connected induced subgraphs. Throws NotConnected.
BuildingSet graphical_building_set(const Graph& g);

struct IntersectionReport {
  bool closed = true;
  std::optional<BlockPair> witness;
  explicit operator bool() const { return closed; }
};

IntersectionReport is_closed_under_intersection(const BuildingSet& b);

// Every cycle induces a clique. Decided through the graphical building set's
// closure under intersection. Throws NotConnected.
bool is_chordful(const Graph& g);

// Smallest block containing r. Throws NotIntersectionClosed.
Block b_hull(const BuildingSet& b, Block r);
// Smallest block containing {s, t}; b_path(b, s, s) = {s}.
Block b_path(const BuildingSet& b, int s, int t);
// All distinct b_path(s, t) over unordered pairs (s = t allowed), sorted.
std::vector<Block> all_b_paths(const BuildingSet& b);

struct GeneratingReport {
  bool generating = true;
  // A block B and element x in B whose covering union falls short of B.
  std::optional<std::pair<Block, int>> witness;
  explicit operator bool() const { return generating; }
};

// For every block B and x in B, the union of members C with x in C ⊆ B must
// equal B. Throws BlockNotInBuildingSet if a member of s is not a block.
GeneratingReport is_generating(const BuildingSet& b, std::span<const Block> s);

}  // namespace remo
