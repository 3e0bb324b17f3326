#pragma once

// Brute-force reference implementations used only to cross-check the library.
// They work from first definitions and share no code paths with it beyond the
// basic Block and Graph containers.

#include <map>
#include <vector>

#include "remo/building.hpp"
#include "remo/rational.hpp"

namespace remo::oracle_ref {

// Connectivity of an induced subgraph by union-find over its edges.
bool connected_by_union_find(const Graph& g, Block subset);

// Every subset with an induced Hamiltonian cycle of length >= 4 is a clique.
bool chordful_by_cycles(const Graph& g);

// Literal building-set axioms over an explicit block list.
bool satisfies_axioms(int n, const std::vector<Block>& blocks);

// Nested-set axioms checked by enumerating every subfamily.
bool literally_nested(const std::vector<Block>& blocks, const std::vector<Block>& members, Block ground);

// All nested sets, grown one block at a time with the literal check.
std::vector<std::vector<Block>> nested_sets(const std::vector<Block>& blocks, Block ground, bool maximal_only);

// Maximal B-tree from a maximal nested set: the parent of element x is the
// element labelling the smallest member strictly above x's own block.
struct ParentTree {
  std::vector<int> parent;  // -1 at the root
  std::vector<Block> below;  // descendant set of each element
};
ParentTree tree_of(const std::vector<Block>& nested, int n);

// Coordinate s counts unordered pairs {u, v} (u = v allowed) whose lowest
// common ancestor is s.
std::vector<long long> lca_point(const ParentTree& t);

// gamma^|D(s)| minus the same over s's children, from explicit parents.
std::vector<Rational> skew_point(const ParentTree& t, const Rational& gamma);

// Smallest block containing both u and v, by scanning every block.
Block smallest_block_containing(const std::vector<Block>& blocks, Block r);

// Pair counts per smallest containing block.
std::map<Block, long long> pair_counts(const std::vector<Block>& blocks, int n);

long long catalan(int n);

}  // namespace remo::oracle_ref
