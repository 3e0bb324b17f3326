#include "remo/minkowski.hpp"

#include <numeric>

#include "remo/errors.hpp"
#include "remo/oracle.hpp"

namespace remo {

MinkowskiWeights::MinkowskiWeights(GroundSet ground, std::map<Block, Rational> weights) : ground_(std::move(ground)) {
  for (auto& [block, y] : weights) {
    if (block.empty()) throw Error(ErrorCode::EmptyBlock, "weighted blocks must be nonempty");
    if (!block.subset_of(ground_.full())) throw Error(ErrorCode::ElementNotInGround, "weighted block outside ground");
    if (y < 0) throw Error(ErrorCode::NegativeWeight, "weight of " + ground_.format(block) + " is negative", {block});
    if (y > 0) weights_.emplace(block, std::move(y));
  }
  if (weights_.empty()) throw Error(ErrorCode::EmptySupport, "at least one weight must be positive");
}

Rational MinkowskiWeights::weight(Block b) const {
  auto it = weights_.find(b);
  return it == weights_.end() ? Rational(0) : it->second;
}

std::vector<Block> MinkowskiWeights::support() const {
  std::vector<Block> out;
  for (const auto& [block, y] : weights_) out.push_back(block);
  return out;
}

DeformationRHS::DeformationRHS(GroundSet ground, std::vector<Rational> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (values_.size() != (std::size_t{1} << ground_.size())) {
    throw Error(ErrorCode::InvalidArgument, "right-hand side needs one value per subset");
  }
}

bool DeformationRHS::is_supermodular() const {
  const std::size_t count = values_.size();
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t q = r + 1; q < count; ++q) {
      if (values_[r] + values_[q] > values_[r | q] + values_[r & q]) return false;
    }
  }
  return true;
}

MinkowskiWeights canonical_weights(const BuildingSet& b) {
  std::map<Block, Rational> counts;
  for (int s = 0; s < b.n(); ++s) {
    for (int t = s; t < b.n(); ++t) counts[b_path(b, s, t)] += 1;
  }
  return MinkowskiWeights(b.ground(), std::move(counts));
}

DeformationRHS weights_to_rhs(const MinkowskiWeights& w) {
  const std::size_t count = std::size_t{1} << w.ground().size();
  std::vector<Rational> z(count);
  for (std::size_t r = 1; r < count; ++r) {
    const Block region(static_cast<Block::Mask>(r));
    for (const auto& [block, y] : w.weights()) {
      if (block.subset_of(region)) z[r] += y;
    }
  }
  return DeformationRHS(w.ground(), std::move(z));
}

HPolytope deformation_hrep(const DeformationRHS& z) {
  const Block full = z.ground().full();
  HPolytope p{z.ground(), z[full], {}};
  for (Block::Mask r = 1; r < full.bits(); ++r) p.constraints.push_back(HalfSpace{Block(r), z[Block(r)]});
  return p;
}

RationalPoint minkowski_vertex(const MinkowskiWeights& w, const RationalPoint& f) {
  if (f.size() != static_cast<std::size_t>(w.ground().size())) {
    throw Error(ErrorCode::InvalidArgument, "functional dimension does not match the ground set");
  }
  RationalPoint out(f.size());
  for (const auto& [block, y] : w.weights()) {
    int best = -1;
    bool tie = false;
    block.for_each([&](int i) {
      const auto ui = static_cast<std::size_t>(i);
      if (best < 0 || f[ui] > f[static_cast<std::size_t>(best)]) {
        best = i;
        tie = false;
      } else if (f[ui] == f[static_cast<std::size_t>(best)]) {
        tie = true;
      }
    });
    if (tie) {
      throw Error(ErrorCode::NonGenericFunctional,
                  "functional is not maximized at a single vertex of the face on " + w.ground().format(block), {block});
    }
    out[static_cast<std::size_t>(best)] += y;
  }
  return out;
}

int minkowski_dimension(std::span<const Block> faces) {
  std::vector<int> parent(static_cast<std::size_t>(kMaxGround));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  Block covered;
  for (Block face : faces) {
    if (face.empty()) continue;
    const int anchor = find(face.first());
    face.for_each([&](int i) { parent[static_cast<std::size_t>(find(i))] = anchor; });
    covered = covered | face;
  }
  int components = 0;
  covered.for_each([&](int i) { components += find(i) == i ? 1 : 0; });
  return covered.size() - components;
}

FaceDecomposition face_of_nested(const BuildingSet& b, const MinkowskiWeights& w, const NestedSet& n) {
  const std::vector<Block> support = w.support();
  if (!is_generating(b, support)) throw Error(ErrorCode::NotGenerating, "weight support is not a generating subset");
  if (!is_nested(b, n)) throw Error(ErrorCode::NotNested, "not a nested set of this building set");

  std::vector<Block> owners = n.members();
  owners.push_back(b.full());
  FaceDecomposition out;
  std::vector<Block> faces;
  for (const auto& [c, y] : w.weights()) {
    Block owner = b.full();
    for (Block m : owners) {
      if (c.subset_of(m) && m.size() < owner.size()) owner = m;
    }
    Block label = owner;
    for (Block m : n.members()) {
      if (m.proper_subset_of(owner)) label = label - m;
    }
    out.summands.push_back(FaceSummand{c, y, owner, c & label});
    faces.push_back(c & label);
  }
  out.dimension = minkowski_dimension(faces);
  return out;
}

bool mink_realizes_fan(const BuildingSet& b, const MinkowskiWeights& w) {
  for (Block c : w.support()) {
    if (!b.contains(c)) throw Error(ErrorCode::BlockNotInBuildingSet, b.ground().format(c) + " is not a block", {c});
  }
  return normal_fan_matches(b, deformation_hrep(weights_to_rhs(w))).matches;
}

}  // namespace remo
