#include "remo/nested.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "remo/errors.hpp"

namespace remo {

NestedSet::NestedSet(std::vector<Block> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NestedSet::contains(Block b) const { return std::binary_search(members_.begin(), members_.end(), b); }

NestedSet NestedSet::without(Block b) const {
  NestedSet out = *this;
  out.members_.erase(std::remove(out.members_.begin(), out.members_.end(), b), out.members_.end());
  return out;
}

NestedSet NestedSet::with(Block b) const {
  NestedSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), b);
  if (it == out.members_.end() || *it != b) out.members_.insert(it, b);
  return out;
}

namespace {

bool nested_or_disjoint(Block a, Block c) { return a.subset_of(c) || c.subset_of(a) || !a.intersects(c); }

// Extends a pairwise-disjoint family with union `acc` of `count` members by
// members from position `from` on; true if some union of >= 2 is a block.
bool disjoint_union_hits_block(const BuildingSet& b, std::span<const Block> members, std::size_t from, Block acc,
                               int count) {
  for (std::size_t i = from; i < members.size(); ++i) {
    if (members[i].intersects(acc)) continue;
    const Block next = acc | members[i];
    if (count + 1 >= 2 && b.contains(next)) return true;
    if (disjoint_union_hits_block(b, members, i + 1, next, count + 1)) return true;
  }
  return false;
}

// Whether `candidate` can join the nested set `members` (assumed nested).
bool compatible(const BuildingSet& b, std::span<const Block> members, Block candidate) {
  for (Block m : members) {
    if (m == candidate || !nested_or_disjoint(m, candidate)) return false;
  }
  return !disjoint_union_hits_block(b, members, 0, candidate, 1);
}

void check_members(const BuildingSet& b, std::span<const Block> members) {
  for (Block m : members) {
    if (!b.contains(m)) throw Error(ErrorCode::BlockNotInBuildingSet, b.ground().format(m) + " is not a block", {m});
    if (m == b.full()) throw Error(ErrorCode::GroundSetMember, "nested sets never contain the ground set", {m});
  }
}

void check_enumerable(const BuildingSet& b) {
  if (b.n() > kMaxEnumerationGround) {
    throw Error(ErrorCode::GroundTooLarge, "enumeration is limited to ground sets of size " +
                                               std::to_string(kMaxEnumerationGround));
  }
}

// Maximal blocks inside `rest`; they partition it because singletons are
// blocks and intersecting blocks have their union in the building set.
std::vector<Block> components(const BuildingSet& b, Block rest) {
  std::vector<Block> out;
  Block covered;
  rest.for_each([&](int x) {
    if (covered.contains(x)) return;
    Block comp;
    for (Block c : b.blocks()) {
      if (c.contains(x) && c.subset_of(rest)) comp = comp | c;
    }
    out.push_back(comp);
    covered = covered | comp;
  });
  return out;
}

class MaximalEnumerator {
 public:
  explicit MaximalEnumerator(const BuildingSet& b) : b_(b) {}

  // Maximal nested sets of the restriction to `top`, as member lists
  // excluding `top` itself.
  const std::vector<std::vector<Block>>& within(Block top) {
    if (auto it = memo_.find(top.bits()); it != memo_.end()) return it->second;
    std::vector<std::vector<Block>> out;
    top.for_each([&](int root) {
      const Block rest = top - Block::singleton(root);
      std::vector<std::vector<Block>> partial{{}};
      for (Block comp : components(b_, rest)) {
        const auto& below = within(comp);
        std::vector<std::vector<Block>> grown;
        grown.reserve(partial.size() * below.size());
        for (const auto& p : partial) {
          for (const auto& q : below) {
            auto merged = p;
            merged.push_back(comp);
            merged.insert(merged.end(), q.begin(), q.end());
            grown.push_back(std::move(merged));
          }
        }
        partial = std::move(grown);
      }
      for (auto& p : partial) out.push_back(std::move(p));
    });
    return memo_.emplace(top.bits(), std::move(out)).first->second;
  }

 private:
  const BuildingSet& b_;
  std::unordered_map<Block::Mask, std::vector<std::vector<Block>>> memo_;
};

void enumerate_all(const BuildingSet& b, const std::vector<Block>& proper, std::size_t from,
                   std::vector<Block>& current, std::vector<NestedSet>& out) {
  out.emplace_back(current);
  for (std::size_t i = from; i < proper.size(); ++i) {
    if (!compatible(b, current, proper[i])) continue;
    current.push_back(proper[i]);
    enumerate_all(b, proper, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

bool is_nested(const BuildingSet& b, std::span<const Block> members) {
  check_members(b, members);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j] || !nested_or_disjoint(members[i], members[j])) return false;
    }
  }
  return !disjoint_union_hits_block(b, members, 0, Block{}, 0);
}

std::vector<NestedSet> nested_complex(const BuildingSet& b, bool maximal_only) {
  check_enumerable(b);
  std::vector<NestedSet> out;
  if (maximal_only) {
    MaximalEnumerator enumerator(b);
    for (const auto& members : enumerator.within(b.full())) out.emplace_back(members);
  } else {
    std::vector<Block> current;
    enumerate_all(b, b.proper_blocks(), 0, current, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BTree::BTree(int ground_size, std::vector<Node> nodes, int root)
    : ground_size_(ground_size), nodes_(std::move(nodes)), root_(root) {}

bool operator==(const BTree& a, const BTree& b) {
  if (a.ground_size_ != b.ground_size_ || a.root_ != b.root_ || a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (x.label != y.label || x.descendants != y.descendants || x.parent != y.parent || x.children != y.children) {
      return false;
    }
  }
  return true;
}

BTree btree_from_nested(const BuildingSet& b, const NestedSet& n) {
  if (!is_nested(b, n)) throw Error(ErrorCode::NotNested, "not a nested set of this building set");
  std::vector<Block> sets = n.members();
  sets.push_back(b.full());
  // Parent of a set is the smallest strictly larger set containing it.
  std::vector<int> parent_set(sets.size(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || !sets[i].proper_subset_of(sets[j])) continue;
      const int p = parent_set[i];
      if (p < 0 || sets[j].proper_subset_of(sets[static_cast<std::size_t>(p)])) parent_set[i] = static_cast<int>(j);
    }
  }
  std::vector<Block> labels = sets;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (parent_set[i] >= 0) {
      auto& l = labels[static_cast<std::size_t>(parent_set[i])];
      l = l - sets[i];
    }
  }
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return labels[x] < labels[y]; });
  std::vector<int> position(sets.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k);

  std::vector<BTree::Node> nodes(sets.size());
  int root = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    auto& node = nodes[k];
    node.label = labels[i];
    node.descendants = sets[i];
    node.parent = parent_set[i] < 0 ? -1 : position[static_cast<std::size_t>(parent_set[i])];
    if (node.parent < 0) root = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].parent >= 0) nodes[static_cast<std::size_t>(nodes[k].parent)].children.push_back(static_cast<int>(k));
  }
  return BTree(b.n(), std::move(nodes), root);
}

NestedSet nested_from_btree(const BTree& t) {
  std::vector<Block> members;
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    if (static_cast<int>(i) != t.root()) members.push_back(t.nodes()[i].descendants);
  }
  return NestedSet(std::move(members));
}

bool is_maximal_nested(const BuildingSet& b, const NestedSet& n) {
  return static_cast<int>(n.size()) == b.n() - 1 && is_nested(b, n);
}

Flip flip(const BuildingSet& b, const NestedSet& n, Block removed) {
  if (!is_maximal_nested(b, n)) throw Error(ErrorCode::NotMaximal, "flips act on maximal nested sets");
  if (!n.contains(removed)) {
    throw Error(ErrorCode::InvalidArgument, b.ground().format(removed) + " is not a member of the nested set");
  }
  const NestedSet base = n.without(removed);
  std::optional<Flip> found;
  for (Block candidate : b.blocks()) {
    if (candidate == b.full() || candidate == removed || !compatible(b, base.members(), candidate)) continue;
    if (found) {
      throw Error(ErrorCode::MultipleFlipsFound, "more than one block completes the facet", {found->added, candidate});
    }
    found = Flip{base.with(candidate), candidate};
  }
  if (!found) throw Error(ErrorCode::NoFlipFound, "no block completes the facet", {removed});
  return *found;
}

namespace {

void add_to(ChildClass& c, int element, int size) {
  for (int other : c.sizes) c.pi += static_cast<std::int64_t>(other) * size;
  c.elements.push_back(element);
  c.sizes.push_back(size);
  c.delta += size;
}

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

FlipContext flip_context(const BTree& t, const BTree& t_prime) {
  if (!t.is_maximal() || !t_prime.is_maximal()) throw Error(ErrorCode::NotMaximal, "flip contexts need maximal trees");
  if (t.ground_size() != t_prime.ground_size()) throw Error(ErrorCode::NotAdjacent, "trees on different ground sets");
  const NestedSet n = nested_from_btree(t);
  const NestedSet n_prime = nested_from_btree(t_prime);
  std::vector<Block> only_t, only_t_prime;
  std::set_difference(n.members().begin(), n.members().end(), n_prime.members().begin(), n_prime.members().end(),
                      std::back_inserter(only_t));
  std::set_difference(n_prime.members().begin(), n_prime.members().end(), n.members().begin(), n.members().end(),
                      std::back_inserter(only_t_prime));
  if (only_t.size() != 1 || only_t_prime.size() != 1) {
    throw Error(ErrorCode::NotAdjacent, "nested sets must differ in exactly one block");
  }

  FlipContext ctx;
  ctx.removed = only_t.front();
  ctx.added = only_t_prime.front();
  for (int e = 0; e < t.ground_size(); ++e) {
    if (e != t.root() && t.descendants_of(e) == ctx.removed) ctx.s = e;
    if (e != t_prime.root() && t_prime.descendants_of(e) == ctx.added) ctx.s_prime = e;
  }
  const int s = ctx.s, sp = ctx.s_prime;
  if (s < 0 || sp < 0 || t.parent_of(s) != sp || t_prime.parent_of(sp) != s) {
    throw Error(ErrorCode::NotAdjacent, "trees are not related by contracting a single arc");
  }

  const auto& s_in_t = t.children_of(s);
  const auto& sp_in_t = t.children_of(sp);
  const auto& s_in_tp = t_prime.children_of(s);
  const auto& sp_in_tp = t_prime.children_of(sp);
  for (int c : s_in_t) {
    const int size = t.descendants_of(c).size();
    if (has(s_in_tp, c)) add_to(ctx.S, c, size);
    else if (has(sp_in_tp, c)) add_to(ctx.R, c, size);
    else throw Error(ErrorCode::NotAdjacent, "child moved outside the contracted node");
  }
  for (int c : sp_in_t) {
    if (c == s) continue;
    const int size = t.descendants_of(c).size();
    if (has(sp_in_tp, c)) add_to(ctx.S_prime, c, size);
    else if (has(s_in_tp, c)) add_to(ctx.R_prime, c, size);
    else throw Error(ErrorCode::NotAdjacent, "child moved outside the contracted node");
  }
  const std::size_t classified =
      ctx.S.elements.size() + ctx.S_prime.elements.size() + ctx.R.elements.size() + ctx.R_prime.elements.size();
  if (classified + 1 != s_in_tp.size() + sp_in_tp.size()) {
    throw Error(ErrorCode::NotAdjacent, "contracted node has different children in the two trees");
  }
  return ctx;
}

std::size_t FlipGraph::index_of(const NestedSet& n) const {
  auto it = std::lower_bound(maximal.begin(), maximal.end(), n);
  if (it == maximal.end() || *it != n) throw Error(ErrorCode::NotNested, "not a maximal nested set of this graph");
  return static_cast<std::size_t>(it - maximal.begin());
}

FlipGraph flip_graph(const BuildingSet& b) {
  FlipGraph g;
  g.maximal = nested_complex(b, true);
  for (std::size_t i = 0; i < g.maximal.size(); ++i) {
    for (Block removed : g.maximal[i].members()) {
      Flip f = flip(b, g.maximal[i], removed);
      const std::size_t j = g.index_of(f.result);
      if (i < j) g.edges.push_back(FlipEdge{i, j, removed, f.added});
    }
  }
  return g;
}

std::vector<BlockPair> exchangeable_pairs(const FlipGraph& g) {
  std::set<BlockPair> pairs;
  for (const auto& e : g.edges) pairs.insert(std::minmax(e.removed, e.added));
  return {pairs.begin(), pairs.end()};
}

std::vector<BlockPair> exchangeable_pairs(const BuildingSet& b) { return exchangeable_pairs(flip_graph(b)); }

ExchangeableClosure exchangeable_closure_holds(const BuildingSet& b) {
  for (const auto& [x, y] : exchangeable_pairs(b)) {
    const Block meet = x & y;
    if (!meet.empty() && !b.contains(meet)) return ExchangeableClosure{false, BlockPair{x, y}};
  }
  return {};
}

}  // namespace remo
