#include "remo/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "remo/errors.hpp"

namespace remo {

namespace {

using Row = std::vector<std::int64_t>;

Row indicator(Block b, int n) {
  Row row(static_cast<std::size_t>(n), 0);
  b.for_each([&](int i) { row[static_cast<std::size_t>(i)] = 1; });
  return row;
}

void normalize(Row& row) {
  std::int64_t g = 0;
  for (auto x : row) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : row) x /= g;
  }
}

// Incremental integer row-echelon form, fraction free with gcd reduction.
// Rows here are 0/1 indicators over at most kMaxOracleGround columns, so
// entries stay tiny.
class Echelon {
 public:
  explicit Echelon(int n) : n_(n) {}

  bool add(Row row) {
    for (const auto& [pivot, basis] : rows_) {
      const auto p = static_cast<std::size_t>(pivot);
      if (row[p] == 0) continue;
      const std::int64_t a = basis[p], c = row[p];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] * a - basis[j] * c;
      normalize(row);
    }
    for (int j = 0; j < n_; ++j) {
      if (row[static_cast<std::size_t>(j)] != 0) {
        rows_.emplace_back(j, std::move(row));
        return true;
      }
    }
    return false;
  }
  void pop() { rows_.pop_back(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int n_;
  std::vector<std::pair<int, Row>> rows_;
};

// Bareiss determinant; exact for integer matrices of this size.
std::int64_t determinant(std::vector<Row> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i][i] == 0) {
      std::size_t r = i + 1;
      while (r < k && m[r][i] == 0) ++r;
      if (r == k) return 0;
      std::swap(m[i], m[r]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
    }
    prev = m[i][i];
  }
  return sign * m[k - 1][k - 1];
}

// Generator of the kernel of an (n-1) x n matrix of rank n-1, by cofactors.
Row kernel_direction(const std::vector<Row>& rows, int n) {
  Row r(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<Row> minor;
    for (const auto& row : rows) {
      Row cut;
      for (int c = 0; c < n; ++c) {
        if (c != j) cut.push_back(row[static_cast<std::size_t>(c)]);
      }
      minor.push_back(std::move(cut));
    }
    const std::int64_t d = determinant(std::move(minor));
    r[static_cast<std::size_t>(j)] = (j % 2 == 0) ? d : -d;
  }
  normalize(r);
  return r;
}

std::int64_t sum_over(const Row& r, Block b) {
  std::int64_t s = 0;
  b.for_each([&](int i) { s += r[static_cast<std::size_t>(i)]; });
  return s;
}

class Enumerator {
 public:
  explicit Enumerator(const HPolytope& p) : p_(p), n_(p.ground.size()) {
    if (n_ > kMaxOracleGround) {
      throw Error(ErrorCode::GroundTooLarge,
                  "the vertex oracle is limited to ground sets of size " + std::to_string(kMaxOracleGround));
    }
    for (const auto& h : p.constraints) {
      if (h.block.empty() || !h.block.subset_of(p.ground.full())) {
        throw Error(ErrorCode::InvalidArgument, "constraint block must be a nonempty subset of the ground set");
      }
      rows_.push_back(indicator(h.block, n_));
    }
    sum_row_ = indicator(p.ground.full(), n_);
  }

  VertexSet run(EnumerationMethod method) {
    check_bounded();
    std::set<RationalPoint> found;
    if (method == EnumerationMethod::Exhaustive) {
      choose(rows_.size(), n_ - 1, [&](const std::vector<std::size_t>& picked) {
        if (auto v = solve_feasible(picked)) found.insert(std::move(*v));
        return false;
      });
    } else {
      walk(found);
    }
    if (found.empty()) throw Error(ErrorCode::Empty, "the polytope has no feasible point");
    VertexSet out;
    for (const auto& v : found) {
      out.vertices.push_back(v);
      out.incidence.push_back(tight_constraints(subset_sums(v)));
    }
    return out;
  }

 private:
  // Calls visit on every index set of size `target` from [0, count) whose
  // rows, together with the sum row, are linearly independent. The pool maps
  // positions to constraint indices. Stops when visit returns true.
  template <typename Visit>
  bool choose(std::size_t count, int target, Visit&& visit, const std::vector<std::size_t>* pool = nullptr) {
    if (target < 0) return false;
    Echelon e(n_);
    e.add(sum_row_);
    std::vector<std::size_t> picked;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
      if (static_cast<int>(picked.size()) == target) return visit(picked);
      for (std::size_t i = from; i < count; ++i) {
        if (count - i < static_cast<std::size_t>(target) - picked.size()) break;
        const std::size_t index = pool ? (*pool)[i] : i;
        if (!e.add(rows_[index])) continue;
        picked.push_back(index);
        const bool stop = rec(i + 1);
        picked.pop_back();
        e.pop();
        if (stop) return true;
      }
      return false;
    };
    return rec(0);
  }

  void check_bounded() {
    Echelon all(n_);
    all.add(sum_row_);
    for (const auto& r : rows_) all.add(r);
    if (all.rank() < n_) {
      throw Error(ErrorCode::Unbounded, "constraint normals leave a lineality direction (or the region is empty)");
    }
    Block singletons;
    for (const auto& h : p_.constraints) {
      if (h.block.size() == 1) singletons = singletons | h.block;
    }
    if (singletons == p_.ground.full()) return;  // x_s bounded below for all s on a fixed-sum hyperplane
    // Probe every extreme-ray candidate of the recession cone.
    const bool unbounded = choose(rows_.size(), n_ - 2, [&](const std::vector<std::size_t>& picked) {
      std::vector<Row> system{sum_row_};
      for (auto i : picked) system.push_back(rows_[i]);
      const Row r = kernel_direction(system, n_);
      for (int sign : {1, -1}) {
        bool recedes = true;
        for (const auto& h : p_.constraints) {
          if (sign * sum_over(r, h.block) < 0) {
            recedes = false;
            break;
          }
        }
        if (recedes) return true;
      }
      return false;
    });
    if (unbounded) throw Error(ErrorCode::Unbounded, "a recession direction satisfies every constraint");
  }

  std::vector<Rational> subset_sums(const RationalPoint& v) const {
    std::vector<Rational> sums(std::size_t{1} << n_);
    for (std::size_t m = 1; m < sums.size(); ++m) {
      const std::size_t low = m & (~m + 1);
      sums[m] = sums[m ^ low] + v[static_cast<std::size_t>(std::countr_zero(low))];
    }
    return sums;
  }

  std::vector<std::size_t> tight_constraints(const std::vector<Rational>& sums) const {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < p_.constraints.size(); ++i) {
      if (sums[p_.constraints[i].block.bits()] == p_.constraints[i].rhs) tight.push_back(i);
    }
    return tight;
  }

  // Solves the picked constraints as equalities with the sum equation.
  std::optional<RationalPoint> solve_feasible(const std::vector<std::size_t>& picked) const {
    const auto n = static_cast<std::size_t>(n_);
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = 1;
    row[n] = p_.sum;
    m.push_back(row);
    for (auto i : picked) {
      for (std::size_t j = 0; j < n; ++j) row[j] = rows_[i][j];
      row[n] = p_.constraints[i].rhs;
      m.push_back(row);
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (m[pivot][c] == 0) ++pivot;  // the system is nonsingular by construction
      std::swap(m[c], m[pivot]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const Rational factor = m[r][c] / m[c][c];
        for (std::size_t k = c; k <= n; ++k) m[r][k] -= factor * m[c][k];
      }
    }
    RationalPoint x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = m[c][n] / m[c][c];
    const auto sums = subset_sums(x);
    for (const auto& h : p_.constraints) {
      if (sums[h.block.bits()] < h.rhs) return std::nullopt;
    }
    return x;
  }

  // Extreme rays of the tangent cone at a vertex, by double description.
  // The tight rows together with the sum row have full rank, so the cone is
  // pointed and a simplicial start exists.
  std::set<Row> edge_directions(const std::vector<std::size_t>& tight) const {
    std::set<Row> out;
    if (n_ < 2) return out;
    const std::size_t m = tight.size();
    std::vector<std::size_t> basis;
    std::vector<bool> in_basis(m, false);
    Echelon e(n_);
    e.add(sum_row_);
    for (std::size_t k = 0; k < m && static_cast<int>(basis.size()) < n_ - 1; ++k) {
      if (e.add(rows_[tight[k]])) {
        basis.push_back(k);
        in_basis[k] = true;
      }
    }
    struct Ray {
      Row dir;
      boost::dynamic_bitset<> zeros;
    };
    auto value = [&](const Row& r, std::size_t k) { return sum_over(r, p_.constraints[tight[k]].block); };
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      std::vector<Row> system{sum_row_};
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i != j) system.push_back(rows_[tight[basis[i]]]);
      }
      Row r = kernel_direction(system, n_);
      if (value(r, basis[j]) < 0) {
        for (auto& x : r) x = -x;
      }
      Ray ray{std::move(r), boost::dynamic_bitset<>(m)};
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i != j) ray.zeros.set(basis[i]);
      }
      rays.push_back(std::move(ray));
    }
    const std::size_t min_common = static_cast<std::size_t>(std::max(0, n_ - 3));
    for (std::size_t k = 0; k < m; ++k) {
      if (in_basis[k]) continue;
      std::vector<std::int64_t> values;
      for (const auto& ray : rays) values.push_back(value(ray.dir, k));
      std::vector<Ray> next;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (values[i] < 0) continue;
        next.push_back(rays[i]);
        if (values[i] == 0) next.back().zeros.set(k);
      }
      for (std::size_t a = 0; a < rays.size(); ++a) {
        if (values[a] <= 0) continue;
        for (std::size_t b = 0; b < rays.size(); ++b) {
          if (values[b] >= 0) continue;
          const auto common = rays[a].zeros & rays[b].zeros;
          if (common.count() < min_common) continue;
          bool adjacent = true;
          for (std::size_t c = 0; c < rays.size() && adjacent; ++c) {
            if (c != a && c != b && common.is_subset_of(rays[c].zeros)) adjacent = false;
          }
          if (!adjacent) continue;
          Row r(static_cast<std::size_t>(n_));
          for (std::size_t j = 0; j < r.size(); ++j) r[j] = values[a] * rays[b].dir[j] - values[b] * rays[a].dir[j];
          normalize(r);
          Ray ray{std::move(r), common};
          ray.zeros.set(k);
          next.push_back(std::move(ray));
        }
      }
      rays = std::move(next);
    }
    for (auto& ray : rays) out.insert(std::move(ray.dir));
    return out;
  }

  // Tries the prefix chains of every ordering of the ground set. When all
  // prefixes are constraint blocks and the right-hand side is supermodular,
  // the first chain already yields a vertex.
  std::optional<RationalPoint> chain_start() const {
    std::map<Block::Mask, std::size_t> by_block;
    for (std::size_t i = 0; i < p_.constraints.size(); ++i) {
      const auto bits = p_.constraints[i].block.bits();
      auto [it, inserted] = by_block.emplace(bits, i);
      if (!inserted && p_.constraints[it->second].rhs < p_.constraints[i].rhs) it->second = i;
    }
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<std::size_t> picked;
      Block::Mask prefix = 0;
      for (int k = 0; k + 1 < n_; ++k) {
        prefix |= Block::Mask{1} << order[static_cast<std::size_t>(k)];
        const auto it = by_block.find(prefix);
        if (it == by_block.end()) break;
        picked.push_back(it->second);
      }
      if (static_cast<int>(picked.size()) != n_ - 1) continue;
      if (auto v = solve_feasible(picked)) return v;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
  }

  void walk(std::set<RationalPoint>& found) {
    std::optional<RationalPoint> start = chain_start();
    if (!start) {
      choose(rows_.size(), n_ - 1, [&](const std::vector<std::size_t>& picked) {
        start = solve_feasible(picked);
        return start.has_value();
      });
    }
    if (!start) return;
    std::deque<RationalPoint> queue{*start};
    found.insert(*start);
    while (!queue.empty()) {
      const RationalPoint v = std::move(queue.front());
      queue.pop_front();
      const auto sums = subset_sums(v);
      const auto tight = tight_constraints(sums);
      const std::set<Row> directions = edge_directions(tight);
      for (const Row& d : directions) {
        std::optional<Rational> step;
        for (std::size_t i = 0; i < p_.constraints.size(); ++i) {
          const std::int64_t rate = sum_over(d, p_.constraints[i].block);
          if (rate >= 0) continue;
          Rational t = (sums[p_.constraints[i].block.bits()] - p_.constraints[i].rhs) / Rational(-rate);
          if (!step || t < *step) step = std::move(t);
        }
        if (!step) throw Error(ErrorCode::Unbounded, "an edge of the polytope is unbounded");
        RationalPoint w = v;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += *step * d[j];
        if (found.insert(w).second) queue.push_back(std::move(w));
      }
    }
  }

  const HPolytope& p_;
  int n_;
  std::vector<Row> rows_;
  Row sum_row_;
};

}  // namespace

VertexSet enumerate_vertices(const HPolytope& p, EnumerationMethod method) { return Enumerator(p).run(method); }

std::vector<std::size_t> minimize(const VertexSet& v, const RationalPoint& f) {
  std::vector<std::size_t> best;
  std::optional<Rational> best_value;
  for (std::size_t i = 0; i < v.vertices.size(); ++i) {
    Rational value = v.vertices[i].dot(f);
    if (!best_value || value < *best_value) {
      best_value = std::move(value);
      best.assign(1, i);
    } else if (value == *best_value) {
      best.push_back(i);
    }
  }
  return best;
}

std::vector<RationalPoint> minimize(const HPolytope& p, const RationalPoint& f) {
  const VertexSet v = enumerate_vertices(p);
  std::vector<RationalPoint> out;
  for (auto i : minimize(v, f)) out.push_back(v.vertices[i]);
  return out;
}

int affine_dimension(const std::vector<RationalPoint>& points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) rows.push_back((points[i] - points[0]).coords());
  const std::size_t cols = points[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    const auto& top = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / top[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * top[k];
    }
    ++rank;
  }
  return rank;
}

SimplicityReport is_simple(const VertexSet& v, int dim) {
  std::map<std::size_t, std::vector<std::size_t>> tight_vertices;
  for (std::size_t i = 0; i < v.incidence.size(); ++i) {
    for (auto c : v.incidence[i]) tight_vertices[c].push_back(i);
  }
  SimplicityReport report;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> facet_count(v.vertices.size(), 0);
  for (const auto& [constraint, verts] : tight_vertices) {
    if (!seen.insert(verts).second) continue;
    std::vector<RationalPoint> points;
    for (auto i : verts) points.push_back(v.vertices[i]);
    if (affine_dimension(points) != dim - 1) continue;
    report.facets.push_back(constraint);
    for (auto i : verts) ++facet_count[i];
  }
  for (std::size_t i = 0; i < facet_count.size(); ++i) {
    if (facet_count[i] != static_cast<std::size_t>(dim)) {
      report.simple = false;
      report.offending_vertex = i;
      report.facets_at_offender = facet_count[i];
      break;
    }
  }
  return report;
}

bool polytopes_equal(const HPolytope& a, const HPolytope& b) {
  if (!(a.ground == b.ground)) return false;
  return enumerate_vertices(a).vertices == enumerate_vertices(b).vertices;
}

FanCheck normal_fan_matches(const BuildingSet& b, const VertexSet& v) {
  FanCheck check;
  const auto maximal = nested_complex(b, true);
  check.vertex_count = v.vertices.size();
  check.maximal_count = maximal.size();
  if (check.vertex_count != check.maximal_count) {
    check.reason = std::to_string(check.vertex_count) + " vertices but " + std::to_string(check.maximal_count) +
                   " maximal nested sets";
    return check;
  }
  std::vector<bool> used(v.vertices.size(), false);
  for (const auto& n : maximal) {
    const auto argmin = minimize(v, interior_functional(b, n));
    if (argmin.size() != 1) {
      check.failing = n;
      check.reason = "interior functional is minimized on " + std::to_string(argmin.size()) + " vertices";
      return check;
    }
    if (used[argmin.front()]) {
      check.failing = n;
      check.reason = "two maximal nested sets select the same vertex";
      return check;
    }
    used[argmin.front()] = true;
  }
  check.matches = true;
  return check;
}

FanCheck normal_fan_matches(const BuildingSet& b, const HPolytope& p) {
  return normal_fan_matches(b, enumerate_vertices(p));
}

}  // namespace remo
