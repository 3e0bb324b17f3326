#include "remo/geometry.hpp"

#include <tuple>

#include "remo/errors.hpp"

namespace remo {

RationalPoint RationalPoint::from_integers(const std::vector<long long>& values) {
  std::vector<Rational> coords;
  coords.reserve(values.size());
  for (long long v : values) coords.emplace_back(v);
  return RationalPoint(std::move(coords));
}

Rational RationalPoint::sum() const {
  Rational out = 0;
  for (const auto& c : coords_) out += c;
  return out;
}

Rational RationalPoint::sum_over(Block b) const {
  Rational out = 0;
  b.for_each([&](int i) { out += coords_[static_cast<std::size_t>(i)]; });
  return out;
}

Rational RationalPoint::dot(const RationalPoint& other) const {
  Rational out = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) out += coords_[i] * other.coords_[i];
  return out;
}

RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
  RationalPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

SkewParams::SkewParams(Rational gamma) : gamma_(std::move(gamma)) {
  if (gamma_ <= 2) throw Error(ErrorCode::GammaTooSmall, "gamma must exceed 2, got " + to_string(gamma_));
}

namespace {

void require_maximal(const BTree& t) {
  if (!t.is_maximal()) throw Error(ErrorCode::NotMaximal, "tree labels must all be singletons");
}

// p(t') - p(t) must be coefficient * (e_s - e_s').
void cross_check(const RationalPoint& before, const RationalPoint& after, const FlipContext& ctx,
                 const Rational& coefficient) {
  const RationalPoint diff = after - before;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    Rational expected = 0;
    if (static_cast<int>(i) == ctx.s) expected = coefficient;
    if (static_cast<int>(i) == ctx.s_prime) expected = -coefficient;
    if (diff[i] != expected) {
      throw Error(ErrorCode::CrossCheckFailed, "point difference disagrees with the flip coefficient " +
                                                   to_string(coefficient) + " at coordinate " + std::to_string(i));
    }
  }
}

Rational gamma_sum(const ChildClass& c, const Rational& gamma) {
  Rational out = 0;
  for (int size : c.sizes) out += power(gamma, size);
  return out;
}

template <typename PointFn, typename DeltaFn>
Realization scan_flips(const BuildingSet& b, RealizeOptions options, PointFn point_of, DeltaFn coefficient_of) {
  const FlipGraph g = flip_graph(b);
  Realization out;
  out.vertices.reserve(g.maximal.size());
  for (const auto& n : g.maximal) {
    BTree t = btree_from_nested(b, n);
    RationalPoint p = point_of(t);
    out.vertices.push_back(TreeVertex{n, std::move(t), std::move(p)});
  }
  for (const auto& e : g.edges) {
    const auto& from = out.vertices[e.from];
    const auto& to = out.vertices[e.to];
    const FlipContext ctx = flip_context(from.tree, to.tree);
    const Rational coefficient = coefficient_of(ctx);
    cross_check(from.point, to.point, ctx, coefficient);
    ++out.flips_checked;
    if (coefficient <= 0) {
      out.failures.push_back(FlipCertificate{from.nested, to.nested, ctx, coefficient});
      if (!options.all_certificates) break;
    }
  }
  out.realizable = out.failures.empty();
  return out;
}

}  // namespace

RationalPoint btree_point(const BTree& t) {
  require_maximal(t);
  std::vector<long long> coords(static_cast<std::size_t>(t.ground_size()));
  for (int s = 0; s < t.ground_size(); ++s) {
    // Trivial path, paths from s down into one child subtree, and paths
    // joining two distinct child subtrees through s.
    long long count = 1;
    const auto& children = t.children_of(s);
    for (std::size_t i = 0; i < children.size(); ++i) {
      const long long a = t.descendants_of(children[i]).size();
      count += a;
      for (std::size_t j = i + 1; j < children.size(); ++j) count += a * t.descendants_of(children[j]).size();
    }
    coords[static_cast<std::size_t>(s)] = count;
  }
  return RationalPoint::from_integers(coords);
}

std::int64_t delta_from_context(const FlipContext& ctx) {
  const auto& [S, Sp, R, Rp] = std::tie(ctx.S, ctx.S_prime, ctx.R, ctx.R_prime);
  return (S.delta + 1) * (Sp.delta + 1) + Rp.delta * (S.delta + Sp.delta + R.delta + 2) + Rp.pi - R.pi;
}

std::int64_t delta(const BTree& t, const BTree& t_prime) {
  const FlipContext ctx = flip_context(t, t_prime);
  const std::int64_t d = delta_from_context(ctx);
  cross_check(btree_point(t), btree_point(t_prime), ctx, Rational(d));
  return d;
}

HPolytope removahedron_hrep(const BuildingSet& b, const std::function<Rational(int)>& phi) {
  HPolytope p{b.ground(), phi(b.n()), {}};
  for (Block block : b.proper_blocks()) p.constraints.push_back(HalfSpace{block, phi(block.size())});
  return p;
}

HPolytope removahedron_hrep(const BuildingSet& b) {
  return removahedron_hrep(b, [](int k) { return Rational(pairs_with_repetition(k)); });
}

HPolytope skew_removahedron_hrep(const BuildingSet& b, const SkewParams& p) {
  return removahedron_hrep(b, [&](int k) { return power(p.gamma(), k); });
}

RationalPoint interior_functional(const BuildingSet& b, const NestedSet& n) {
  if (!is_maximal_nested(b, n)) throw Error(ErrorCode::NotMaximal, "interior functionals need a maximal nested set");
  const std::size_t dim = static_cast<std::size_t>(b.n());
  RationalPoint f(dim);
  for (Block member : n.members()) {
    const Rational shift(member.size(), b.n());
    for (std::size_t i = 0; i < dim; ++i) {
      f[i] += (member.contains(static_cast<int>(i)) ? Rational(1) : Rational(0)) - shift;
    }
  }
  return f;
}

RationalPoint skew_point(const BTree& t, const SkewParams& p) {
  require_maximal(t);
  RationalPoint out(static_cast<std::size_t>(t.ground_size()));
  for (int s = 0; s < t.ground_size(); ++s) {
    Rational value = power(p.gamma(), t.descendants_of(s).size());
    for (int c : t.children_of(s)) value -= power(p.gamma(), t.descendants_of(c).size());
    out[static_cast<std::size_t>(s)] = value;
  }
  return out;
}

Rational skew_delta_from_context(const FlipContext& ctx, const SkewParams& p) {
  const Rational& g = p.gamma();
  const auto& [S, Sp, R, Rp] = std::tie(ctx.S, ctx.S_prime, ctx.R, ctx.R_prime);
  const auto exp = [](std::int64_t e) { return static_cast<int>(e); };
  return power(g, exp(2 + S.delta + Rp.delta + Sp.delta + R.delta)) - power(g, exp(1 + Sp.delta + R.delta)) -
         power(g, exp(1 + S.delta + R.delta)) + gamma_sum(R, g) - gamma_sum(Rp, g);
}

Rational skew_delta(const BTree& t, const BTree& t_prime, const SkewParams& p) {
  const FlipContext ctx = flip_context(t, t_prime);
  Rational d = skew_delta_from_context(ctx, p);
  cross_check(skew_point(t, p), skew_point(t_prime, p), ctx, d);
  return d;
}

Realization is_removahedron_realizable(const BuildingSet& b, RealizeOptions options) {
  return scan_flips(
      b, options, [](const BTree& t) { return btree_point(t); },
      [](const FlipContext& ctx) { return Rational(delta_from_context(ctx)); });
}

Realization skew_realization(const BuildingSet& b, const SkewParams& p, RealizeOptions options) {
  return scan_flips(
      b, options, [&](const BTree& t) { return skew_point(t, p); },
      [&](const FlipContext& ctx) { return skew_delta_from_context(ctx, p); });
}

}  // namespace remo
