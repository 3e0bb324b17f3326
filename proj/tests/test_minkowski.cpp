#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "remo/errors.hpp"
#include "remo/minkowski.hpp"
#include "remo/oracle.hpp"

using namespace remo;
using namespace remo::testing;

namespace {

NestedSet ns(const std::vector<std::vector<int>>& lists) {
  std::vector<Block> m;
  for (const auto& l : lists) m.push_back(blk(l));
  return NestedSet(m);
}

RationalPoint pt(const std::vector<long long>& v) { return RationalPoint::from_integers(v); }

MinkowskiWeights unit(const GroundSet& g, const std::vector<Block>& support) {
  std::map<Block, Rational> w;
  for (Block b : support) w[b] = 1;
  return MinkowskiWeights(g, w);
}

RationalPoint negate(const RationalPoint& p) { return RationalPoint(p.size()) - p; }

}  // namespace

TEST_CASE("weights validation") {
  const GroundSet g = GroundSet::range(2);
  CHECK_THROWS_AS(MinkowskiWeights(g, {{blk({1}), Rational(-1)}}), Error);
  CHECK_THROWS_AS(MinkowskiWeights(g, {{blk({1}), Rational(0)}}), Error);
  const MinkowskiWeights w(g, {{blk({1}), Rational(0)}, {blk({1, 2}), Rational(2)}});
  CHECK(w.support() == std::vector<Block>{blk({1, 2})});
  CHECK(w.weight(blk({1})) == 0);
}

TEST_CASE("canonical weights") {
  const MinkowskiWeights w = canonical_weights(b5prime());
  CHECK(w.weights() == std::map<Block, Rational>{
                           {blk({1}), 1}, {blk({2}), 1}, {blk({3}), 1}, {blk({1, 2}), 1}, {blk({1, 2, 3}), 2}});
  for (int n : {3, 4, 5}) {
    const BuildingSet k = graphical_building_set(complete_graph(n));
    const MinkowskiWeights w = canonical_weights(k);
    for (const auto& [block, y] : w.weights()) {
      CHECK(block.size() <= 2);
      CHECK(y == 1);
    }
    CHECK(canonical_weights(k).weights().size() == static_cast<std::size_t>(n + n * (n - 1) / 2));
  }
  CHECK_THROWS_AS(canonical_weights(b1()), Error);
}

TEST_CASE("canonical weights count pairs by smallest containing block") {
  auto check = [](const BuildingSet& b) {
    const MinkowskiWeights w = canonical_weights(b);
    const auto ref = oracle_ref::pair_counts(b.blocks(), b.n());
    REQUIRE(w.weights().size() == ref.size());
    for (const auto& [block, count] : ref) CHECK(w.weight(block) == count);
    CHECK(w.support() == all_b_paths(b));
    for (Block block : b.blocks()) {
      Rational total = 0;
      for (const auto& [s, y] : w.weights())
        if (s.subset_of(block)) total += y;
      CHECK(total == pairs_with_repetition(block.size()));
    }
  };
  for (const auto& [name, b] : corpus())
    if (b.closed_under_intersection()) check(b);
  for (const auto& b : random_closed_sets(31, 60, 6)) check(b);
}

TEST_CASE("deformation right-hand sides") {
  const DeformationRHS z = weights_to_rhs(canonical_weights(b5prime()));
  CHECK(z[blk({1, 2, 3})] == 6);
  CHECK(z[blk({1, 2})] == 3);
  CHECK(z[blk({1, 3})] == 2);
  CHECK(z[Block()] == 0);
  CHECK(z.is_supermodular());

  const DeformationRHS single = weights_to_rhs(unit(GroundSet::range(3), {blk({2})}));
  for (Block::Mask m = 1; m < 8; ++m) CHECK(single[Block(m)] == (Block(m).contains(1) ? 1 : 0));

  for (const auto& b : random_closed_sets(41, 30, 6)) {
    const DeformationRHS zb = weights_to_rhs(canonical_weights(b));
    for (Block block : b.blocks()) CHECK(zb[block] == pairs_with_repetition(block.size()));
  }
}

TEST_CASE("supermodularity holds for random nonnegative weights") {
  Rng rng(6);
  std::uniform_int_distribution<int> value(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    std::map<Block, Rational> w;
    for (Block::Mask m = 1; m < (Block::Mask{1} << n); ++m) w[Block(m)] = Rational(value(rng), 1 + value(rng));
    w[Block::full(n)] = 1;
    CHECK(weights_to_rhs(MinkowskiWeights(GroundSet::range(n), w)).is_supermodular());
  }
  // A violating table.
  std::vector<Rational> bad{0, 2, 2, 3};
  CHECK_FALSE(DeformationRHS(GroundSet::range(2), bad).is_supermodular());
}

TEST_CASE("minkowski vertices") {
  const MinkowskiWeights w = canonical_weights(b5prime());
  const RationalPoint f = negate(interior_functional(b5prime(), ns({{1}, {1, 2}})));
  CHECK(f == pt({-1, 0, 1}));
  CHECK(minkowski_vertex(w, f) == pt({1, 2, 3}));
  const MinkowskiWeights top(GroundSet::range(3), {{blk({1, 2, 3}), Rational(5)}});
  CHECK(minkowski_vertex(top, pt({0, 7, 1})) == pt({0, 5, 0}));
  CHECK_THROWS_AS(minkowski_vertex(top, pt({1, 1, 0})), Error);
}

TEST_CASE("minkowski vertices reproduce the oracle vertices") {
  for (const auto& [name, b] : corpus()) {
    if (!b.closed_under_intersection()) continue;
    CAPTURE(name);
    const MinkowskiWeights w = canonical_weights(b);
    const VertexSet vs = enumerate_vertices(deformation_hrep(weights_to_rhs(w)));
    std::vector<RationalPoint> from_functionals;
    for (const auto& n : nested_complex(b, true)) {
      from_functionals.push_back(minkowski_vertex(w, negate(interior_functional(b, n))));
    }
    std::sort(from_functionals.begin(), from_functionals.end());
    from_functionals.erase(std::unique(from_functionals.begin(), from_functionals.end()), from_functionals.end());
    CHECK(from_functionals == vs.vertices);
  }
}

TEST_CASE("faces of nested sets") {
  const MinkowskiWeights w = canonical_weights(b5prime());
  CHECK(face_of_nested(b5prime(), w, ns({})).dimension == 2);
  const FaceDecomposition vertex = face_of_nested(b5prime(), w, ns({{1}, {1, 2}}));
  CHECK(vertex.dimension == 0);
  for (const auto& s : vertex.summands) CHECK(s.face.size() == 1);

  const BuildingSet p3 = graphical_building_set(path_graph(3));
  const MinkowskiWeights all = unit(p3.ground(), p3.blocks());
  const FaceDecomposition edge = face_of_nested(p3, all, ns({{1, 2}}));
  CHECK(edge.dimension == 1);
  for (const auto& s : edge.summands) {
    if (s.summand == blk({1, 2, 3})) {
      CHECK(s.owner == blk({1, 2, 3}));
      CHECK(s.face == blk({3}));
    }
    if (s.summand == blk({1, 2})) CHECK(s.face == blk({1, 2}));
  }

  const std::vector<Block> singles{blk({1}), blk({2}), blk({3})};
  CHECK_THROWS_AS(face_of_nested(p3, unit(p3.ground(), singles), ns({})), Error);
  CHECK_THROWS_AS(face_of_nested(p3, all, ns({{1}, {2}})), Error);
}

TEST_CASE("face dimension equals ground size minus one minus nested size") {
  for (const auto& [name, b] : corpus()) {
    CAPTURE(name);
    const MinkowskiWeights w = unit(b.ground(), b.blocks());
    for (const auto& n : nested_complex(b, false)) {
      CHECK(face_of_nested(b, w, n).dimension == b.n() - 1 - static_cast<int>(n.size()));
    }
  }
}

TEST_CASE("face dimension agrees with the oracle on vertices of the face") {
  const BuildingSet b = graphical_building_set(path_graph(4));
  const MinkowskiWeights w = unit(b.ground(), b.blocks());
  const VertexSet vs = enumerate_vertices(deformation_hrep(weights_to_rhs(w)));
  const auto maximal = nested_complex(b, true);
  for (const auto& n : nested_complex(b, false)) {
    // The face of n contains the vertices of every maximal nested set above n.
    std::vector<RationalPoint> face;
    for (const auto& m : maximal) {
      if (!std::includes(m.members().begin(), m.members().end(), n.members().begin(), n.members().end())) continue;
      face.push_back(minkowski_vertex(w, negate(interior_functional(b, m))));
    }
    CHECK(affine_dimension(face) == face_of_nested(b, w, n).dimension);
  }
}

TEST_CASE("minkowski dimension of simplex faces") {
  CHECK(minkowski_dimension(std::vector<Block>{blk({1, 2}), blk({2, 3})}) == 2);
  CHECK(minkowski_dimension(std::vector<Block>{blk({1}), blk({2})}) == 0);
  CHECK(minkowski_dimension(std::vector<Block>{blk({1, 2}), blk({3, 4})}) == 2);
  CHECK(minkowski_dimension(std::vector<Block>{blk({1, 2, 3})}) == 2);
}

TEST_CASE("fan realization by weighted sums") {
  for (int n : {3, 4, 5}) {
    const BuildingSet p = graphical_building_set(path_graph(n));
    CHECK(mink_realizes_fan(p, unit(p.ground(), p.blocks())));
    CHECK(polytopes_equal(deformation_hrep(weights_to_rhs(canonical_weights(p))), removahedron_hrep(p)));
  }
  const BuildingSet p3 = graphical_building_set(path_graph(3));
  CHECK_FALSE(mink_realizes_fan(p3, unit(p3.ground(), {blk({1}), blk({2}), blk({3})})));
  CHECK_THROWS_AS(mink_realizes_fan(p3, unit(p3.ground(), {blk({1, 3})})), Error);

  // Generating supports with random positive weights.
  Rng rng(12);
  std::uniform_int_distribution<int> value(1, 4);
  for (const auto& [name, b] : corpus()) {
    if (b.n() > 5) continue;
    CAPTURE(name);
    std::map<Block, Rational> w;
    for (Block block : b.blocks()) w[block] = Rational(value(rng), value(rng));
    CHECK(mink_realizes_fan(b, MinkowskiWeights(b.ground(), w)));
  }
}

TEST_CASE("random generating supports realize the fan") {
  for (const auto& b : random_closed_sets(77, 30, 5)) {
    const auto paths = all_b_paths(b);
    REQUIRE(is_generating(b, paths).generating);
    CHECK(mink_realizes_fan(b, canonical_weights(b)));
    std::map<Block, Rational> w;
    for (Block p : paths) w[p] = Rational(p.size() + 1, 2);
    CHECK(mink_realizes_fan(b, MinkowskiWeights(b.ground(), w)));
  }
}
