#pragma once

#include <map>
#include <vector>

#include "remo/geometry.hpp"

namespace remo {

// Nonnegative dilation factors y_S of simplex faces; absent blocks weigh 0.
class MinkowskiWeights {
 public:
  // Zero weights are dropped. Throws NegativeWeight, EmptySupport,
  // ElementNotInGround, EmptyBlock.
  MinkowskiWeights(GroundSet ground, std::map<Block, Rational> weights);

  const GroundSet& ground() const { return ground_; }
  const std::map<Block, Rational>& weights() const { return weights_; }
  Rational weight(Block b) const;
  std::vector<Block> support() const;

 private:
  GroundSet ground_;
  std::map<Block, Rational> weights_;
};

// z_R for every subset R of the ground set, indexed by the mask of R.
class DeformationRHS {
 public:
  DeformationRHS(GroundSet ground, std::vector<Rational> values);

  const GroundSet& ground() const { return ground_; }
  const Rational& operator[](Block r) const { return values_[r.bits()]; }

  // z_R + z_R' <= z_{R u R'} + z_{R n R'} for all R, R'.
  bool is_supermodular() const;

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

// y_S counts unordered pairs {s, t} (s = t allowed) whose B-path is S.
// Throws NotIntersectionClosed.
MinkowskiWeights canonical_weights(const BuildingSet& b);

// z_R = sum of y_S over S contained in R.
DeformationRHS weights_to_rhs(const MinkowskiWeights& w);

// One inequality per nonempty proper subset, sum fixed to z of the ground set.
HPolytope deformation_hrep(const DeformationRHS& z);

// Sum over the support of y_S times the vertex of the simplex face on S that
// maximizes f. Throws NonGenericFunctional on ties inside a summand.
RationalPoint minkowski_vertex(const MinkowskiWeights& w, const RationalPoint& f);

struct FaceSummand {
  Block summand;    // C
  Rational weight;  // y_C
  Block owner;      // smallest member of n (or the ground set) containing C
  Block face;       // C intersected with the label of owner
};

struct FaceDecomposition {
  std::vector<FaceSummand> summands;
  int dimension = 0;
};

// The face of the Minkowski sum picked out by a nested set and its affine
// dimension. Errors: NotGenerating, NotNested, BlockNotInBuildingSet.
FaceDecomposition face_of_nested(const BuildingSet& b, const MinkowskiWeights& w, const NestedSet& n);

// Affine dimension of a sum of simplex faces: covered elements minus the
// number of connected components of the overlap hypergraph.
int minkowski_dimension(std::span<const Block> faces);

// The deformed permutahedron of w realizes the nested fan of b (checked by
// the vertex-enumeration oracle). Errors: BlockNotInBuildingSet,
// GroundTooLarge.
bool mink_realizes_fan(const BuildingSet& b, const MinkowskiWeights& w);

}  // namespace remo
