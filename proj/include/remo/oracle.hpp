#pragma once

#include <optional>
#include <string>
#include <vector>

#include "remo/geometry.hpp"

namespace remo {

// Largest ground set the brute-force oracle accepts.
inline constexpr int kMaxOracleGround = 8;

struct VertexSet {
  std::vector<RationalPoint> vertices;                // sorted
  std::vector<std::vector<std::size_t>> incidence;    // tight constraint indices per vertex
};

enum class EnumerationMethod {
  // Walk the vertex-edge graph from a first basic solution: at each vertex,
  // every rank-deficient-by-one subsystem of the tight constraints gives a
  // candidate edge direction, followed by an exact ratio test.
  Adjacency,
  // Solve every square subsystem of constraint hyperplanes plus the sum
  // equation and keep the feasible solutions.
  Exhaustive,
};

// Exact vertex set of a bounded H-polytope inside its sum hyperplane.
// Errors: GroundTooLarge, Unbounded, Empty.
VertexSet enumerate_vertices(const HPolytope& p, EnumerationMethod method = EnumerationMethod::Adjacency);

// Vertices attaining the exact minimum of <f, x>.
std::vector<RationalPoint> minimize(const HPolytope& p, const RationalPoint& f);
// Indices into v.vertices.
std::vector<std::size_t> minimize(const VertexSet& v, const RationalPoint& f);

int affine_dimension(const std::vector<RationalPoint>& points);

struct SimplicityReport {
  bool simple = true;
  // Constraint indices that define facets (one representative per facet).
  std::vector<std::size_t> facets;
  std::optional<std::size_t> offending_vertex;
  std::size_t facets_at_offender = 0;
  explicit operator bool() const { return simple; }
};

// A constraint defines a facet when its tight vertices span an affine space
// of dimension dim - 1; the polytope is simple when every vertex lies on
// exactly dim facets.
SimplicityReport is_simple(const VertexSet& v, int dim);

// Exact equality of vertex sets.
bool polytopes_equal(const HPolytope& a, const HPolytope& b);

struct FanCheck {
  bool matches = false;
  std::size_t vertex_count = 0;
  std::size_t maximal_count = 0;
  std::optional<NestedSet> failing;
  std::string reason;
  explicit operator bool() const { return matches; }
};

// The polytope has one vertex per maximal nested set, each the unique
// minimizer of that nested set's interior functional, all distinct.
FanCheck normal_fan_matches(const BuildingSet& b, const HPolytope& p);
FanCheck normal_fan_matches(const BuildingSet& b, const VertexSet& v);

}  // namespace remo
