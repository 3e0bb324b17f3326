#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "remo/building.hpp"

namespace remo {

// Largest ground set for which nested complexes and flip graphs are
// enumerated (9! maximal nested sets for the complete building set).
inline constexpr int kMaxEnumerationGround = 9;

// A set of proper blocks kept in lexicographic order. Whether it is actually
// nested depends on the building set; see is_nested.
class NestedSet {
 public:
  NestedSet() = default;
  explicit NestedSet(std::vector<Block> members);

  const std::vector<Block>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Block b) const;

  NestedSet without(Block b) const;
  NestedSet with(Block b) const;

  friend bool operator==(const NestedSet&, const NestedSet&) = default;
  friend std::strong_ordering operator<=>(const NestedSet& a, const NestedSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Block> members_;
};

// (N1) members pairwise nested or disjoint and (N2) no union of two or more
// pairwise disjoint members is a block. Errors: BlockNotInBuildingSet,
// GroundSetMember.
bool is_nested(const BuildingSet& b, std::span<const Block> members);
inline bool is_nested(const BuildingSet& b, const NestedSet& n) { return is_nested(b, n.members()); }

// All nested sets (or only the inclusion-maximal ones), lexicographically
// sorted. The empty nested set is included when maximal_only is false.
// Throws GroundTooLarge beyond kMaxEnumerationGround.
std::vector<NestedSet> nested_complex(const BuildingSet& b, bool maximal_only);

// Rooted tree with label sets partitioning the ground set. Nodes are sorted by
// label, so in a maximal tree node i carries the singleton label {i}.
class BTree {
 public:
  struct Node {
    Block label;
    Block descendants;
    int parent = -1;
    std::vector<int> children;
  };

  BTree(int ground_size, std::vector<Node> nodes, int root);

  int ground_size() const { return ground_size_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
  int root() const { return root_; }
  bool is_maximal() const { return static_cast<int>(nodes_.size()) == ground_size_; }

  // Element-indexed accessors, valid on maximal trees only.
  int parent_of(int element) const { return node(element).parent; }
  const std::vector<int>& children_of(int element) const { return node(element).children; }
  Block descendants_of(int element) const { return node(element).descendants; }

  friend bool operator==(const BTree& a, const BTree& b);

 private:
  int ground_size_ = 0;
  std::vector<Node> nodes_;
  int root_ = -1;
};

// The B-tree whose non-root descendant sets are the members of n. Throws
// NotNested.
BTree btree_from_nested(const BuildingSet& b, const NestedSet& n);
NestedSet nested_from_btree(const BTree& t);

bool is_maximal_nested(const BuildingSet& b, const NestedSet& n);

struct Flip {
  NestedSet result;
  Block added;
};

// The unique other maximal nested set sharing n \ {removed}, found by
// exhaustive search over candidate blocks. Errors: NotMaximal,
// InvalidArgument (removed not a member), NoFlipFound, MultipleFlipsFound.
Flip flip(const BuildingSet& b, const NestedSet& n, Block removed);

// Children of the contracted node {s, s'} grouped by where they hang in the
// two trees, with their descendant sizes.
struct ChildClass {
  std::vector<int> elements;
  std::vector<int> sizes;
  // Sum of descendant sizes.
  std::int64_t delta = 0;
  // Sum over unordered pairs of distinct members of the size products.
  std::int64_t pi = 0;
};

struct FlipContext {
  int s = -1;        // D(s, t) is the block that leaves N(t)
  int s_prime = -1;  // D(s', t') is the block that enters N(t'); s' is s's parent in t
  Block removed;
  Block added;
  ChildClass S;        // children of s in both trees
  ChildClass S_prime;  // children of s' in both trees
  ChildClass R;        // child of s in t, of s' in t'
  ChildClass R_prime;  // child of s' in t, of s in t'
};

// Errors: NotMaximal, NotAdjacent.
FlipContext flip_context(const BTree& t, const BTree& t_prime);

struct FlipEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Block removed;  // member of maximal[from]
  Block added;    // member of maximal[to]
};

// Maximal nested sets (sorted) and every flip between them, each unordered
// flip listed once with from < to, ordered by (from, removed).
struct FlipGraph {
  std::vector<NestedSet> maximal;
  std::vector<FlipEdge> edges;

  std::size_t index_of(const NestedSet& n) const;
};

FlipGraph flip_graph(const BuildingSet& b);

// Unordered pairs {B, B'} exchanged by some flip, each stored with B < B'.
std::vector<BlockPair> exchangeable_pairs(const BuildingSet& b);
std::vector<BlockPair> exchangeable_pairs(const FlipGraph& g);

struct ExchangeableClosure {
  bool holds = true;
  std::optional<BlockPair> witness;
  explicit operator bool() const { return holds; }
};

// Intersecting exchangeable blocks always meet in a block.
ExchangeableClosure exchangeable_closure_holds(const BuildingSet& b);

}  // namespace remo
