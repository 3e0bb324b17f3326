#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "remo/nested.hpp"
#include "remo/rational.hpp"

namespace remo {

// Exact point in R^ground; coordinate i belongs to ground element i.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::size_t dimension) : coords_(dimension) {}
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static RationalPoint from_integers(const std::vector<long long>& values);

  std::size_t size() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  Rational sum() const;
  Rational sum_over(Block b) const;
  Rational dot(const RationalPoint& other) const;

  friend RationalPoint operator-(const RationalPoint& a, const RationalPoint& b);
  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

struct HalfSpace {
  Block block;  // sum of x_s over the block is at least rhs
  Rational rhs;
};

// {x : sum_s x_s = sum, sum_{s in B} x_s >= rhs for every constraint}.
struct HPolytope {
  GroundSet ground;
  Rational sum;
  std::vector<HalfSpace> constraints;
};

class SkewParams {
 public:
  // Throws GammaTooSmall unless gamma > 2.
  explicit SkewParams(Rational gamma);
  const Rational& gamma() const { return gamma_; }

 private:
  Rational gamma_;
};

// Coordinate s counts the vertex paths (trivial ones included) whose topmost
// vertex is s. Throws NotMaximal.
RationalPoint btree_point(const BTree& t);

// Flip coefficient straight from the child classification.
std::int64_t delta_from_context(const FlipContext& ctx);

// Flip coefficient; also verifies p(t') - p(t) = delta (e_s - e_s') and
// throws CrossCheckFailed on disagreement. Errors: NotAdjacent, NotMaximal.
std::int64_t delta(const BTree& t, const BTree& t_prime);

// Right-hand side phi(|B|) for every proper block, sum phi(n).
HPolytope removahedron_hrep(const BuildingSet& b, const std::function<Rational(int)>& phi);
// phi(k) = binom(k + 1, 2).
HPolytope removahedron_hrep(const BuildingSet& b);
// phi(k) = gamma^k.
HPolytope skew_removahedron_hrep(const BuildingSet& b, const SkewParams& p);

// Sum over members N of the projection of 1_N onto the sum-zero hyperplane.
// Throws NotMaximal unless n is a maximal nested set of b.
RationalPoint interior_functional(const BuildingSet& b, const NestedSet& n);

// The point whose subtree sums are gamma^|D(s)|: p_s = gamma^|D(s)| minus
// gamma^|D(c)| over the children c of s.
RationalPoint skew_point(const BTree& t, const SkewParams& p);
Rational skew_delta_from_context(const FlipContext& ctx, const SkewParams& p);
// Cross-checked against skew_point differences like delta().
Rational skew_delta(const BTree& t, const BTree& t_prime, const SkewParams& p);

struct TreeVertex {
  NestedSet nested;
  BTree tree;
  RationalPoint point;
};

struct FlipCertificate {
  NestedSet from;
  NestedSet to;
  FlipContext context;  // s, s' and the classification, computed from tree(from) to tree(to)
  Rational delta;
};

struct Realization {
  bool realizable = false;
  std::vector<TreeVertex> vertices;
  // Non-positive flips. The first entry is the lexicographically smallest
  // failure; all of them are listed when requested.
  std::vector<FlipCertificate> failures;
  std::size_t flips_checked = 0;
};

struct RealizeOptions {
  bool all_certificates = false;
};

// Whether every flip has positive coefficient (classical right-hand sides).
Realization is_removahedron_realizable(const BuildingSet& b, RealizeOptions options = {});
// Same scan with the skew points and coefficients.
Realization skew_realization(const BuildingSet& b, const SkewParams& p, RealizeOptions options = {});

}  // namespace remo
