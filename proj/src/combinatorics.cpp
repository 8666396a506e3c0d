#include "ngpoly/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace ngpoly {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string list_to_string(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::vector<std::size_t> mask_to_list(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

bool is_zero_one(const std::vector<LatticePoint>& vertices) {
  for (const auto& v : vertices)
    for (auto x : v)
      if (x != 0 && x != 1) return false;
  return true;
}

// Gorenstein data of a lower-dimensional factor, after projection.
FactorReport factor_report(const std::vector<std::size_t>& coordinates,
                           const std::vector<LatticePoint>& vertices) {
  auto proj = project_to_full_dimension(vertices);
  FactorReport r{coordinates, proj.dim(), {}};
  r.gorenstein = is_gorenstein(proj.projected);
  return r;
}

bool codegrees_within_one(const std::vector<long>& a) {
  if (a.empty()) return true;
  auto [lo, hi] = std::minmax_element(a.begin(), a.end());
  return *hi - *lo <= 1;
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, EdgeList edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= vertex_count_ || v >= vertex_count_)
      throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint out of range");
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
}

bool Multigraph::is_simple() const {
  std::set<std::pair<std::size_t, std::size_t>> seen(edges_.begin(), edges_.end());
  return seen.size() == edges_.size();
}

std::vector<std::vector<std::size_t>> Multigraph::components() const {
  UnionFind uf(vertex_count_);
  for (auto [u, v] : edges_) uf.unite(u, v);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < vertex_count_; ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

SimpleGraph::SimpleGraph(std::size_t vertex_count, EdgeList edges)
    : Multigraph(vertex_count, std::move(edges)), adjacency_(vertex_count, 0) {
  if (vertex_count > 64) throw Error("simple graphs are limited to 64 vertices");
  if (!is_simple()) throw Error("graph has parallel edges");
  for (auto [u, v] : this->edges()) {
    adjacency_[u] |= std::uint64_t{1} << v;
    adjacency_[v] |= std::uint64_t{1} << u;
  }
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const { return adjacency_.at(u) >> v & 1; }

ProjectedPolytope project_to_full_dimension(const std::vector<LatticePoint>& vertices) {
  if (vertices.empty()) throw Error("polytope without vertices");
  auto proj = affine_lattice_projection(vertices);
  ProjectedPolytope out;
  out.original = Polytope::from_points(vertices, vertices[0].size());
  out.map = proj.map;
  out.projected = Polytope::from_points(proj.points, proj.map.dim);
  return out;
}

ProjectedPolytope edge_polytope(const SimpleGraph& g) {
  auto comps = g.components();
  if (comps.size() > 1) {
    std::string names;
    for (const auto& c : comps) names += " " + list_to_string(c);
    throw Error("graph is disconnected; components:" + names);
  }
  if (g.edges().empty()) throw Error("graph has no edges");
  std::vector<LatticePoint> vertices;
  for (auto [u, v] : g.edges()) {
    LatticePoint p(g.vertex_count(), 0);
    p[u] = p[v] = 1;
    vertices.push_back(p);
  }
  return project_to_full_dimension(vertices);
}

OddCycleResult odd_cycle_condition(const SimpleGraph& g, std::size_t vertex_cap) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_cap)
    throw Error("odd cycle enumeration is capped at " + std::to_string(vertex_cap) + " vertices");
  // Each cycle is enumerated from its smallest vertex; only vertex sets matter.
  std::set<std::uint64_t> odd;
  std::function<void(std::size_t, std::size_t, std::uint64_t, std::size_t)> extend =
      [&](std::size_t start, std::size_t v, std::uint64_t used, std::size_t length) {
        std::uint64_t next = g.neighbours(v);
        if (length >= 3 && length % 2 == 1 && (next >> start & 1)) odd.insert(used);
        for (std::size_t w = start + 1; w < n; ++w)
          if ((next >> w & 1) && !(used >> w & 1))
            extend(start, w, used | std::uint64_t{1} << w, length + 1);
      };
  for (std::size_t s = 0; s < n; ++s) extend(s, s, std::uint64_t{1} << s, 1);

  OddCycleResult out;
  out.odd_cycle_count = odd.size();
  std::vector<std::uint64_t> cycles(odd.begin(), odd.end());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::uint64_t reach = 0;
    for (auto v : mask_to_list(cycles[i])) reach |= g.neighbours(v);
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[i] & cycles[j]) continue;
      if (reach & cycles[j]) continue;
      out.violation = std::make_pair(mask_to_list(cycles[i]), mask_to_list(cycles[j]));
      return out;
    }
  }
  out.holds = true;
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_sides(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !g.is_connected()) return std::nullopt;
  std::vector<int> colour(n, -1);
  colour[0] = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (!g.adjacent(v, w)) continue;
      if (colour[w] == colour[v]) return std::nullopt;
      if (colour[w] < 0) {
        colour[w] = 1 - colour[v];
        stack.push_back(w);
      }
    }
  }
  std::size_t a = std::count(colour.begin(), colour.end(), 0), b = n - a;
  if (g.edges().size() != a * b) return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

EdgePolytopeVerdict ng_edge_polytope(const SimpleGraph& g) {
  auto occ = odd_cycle_condition(g);
  if (!occ.holds)
    throw Error("odd cycle condition fails for cycles " + list_to_string(occ.violation->first) +
                " and " + list_to_string(occ.violation->second));
  auto p = edge_polytope(g);
  if (p.dim() == 0) throw Error("edge polytope is a single point");
  EdgePolytopeVerdict out;
  NGOptions options;
  options.assume_idp = true;  // odd cycle condition
  out.engine = is_nearly_gorenstein(p.projected, options);
  out.gorenstein = out.engine.gorenstein.holds;
  auto sides = complete_bipartite_sides(g);
  out.is_k_n_n_plus_1 = sides && sides->first >= 2 && sides->second == sides->first + 1;
  out.formula = out.gorenstein || out.is_k_n_n_plus_1;
  return out;
}

ProductDecomposition product_decompose_01(const std::vector<LatticePoint>& vertices) {
  if (vertices.empty()) throw Error("polytope without vertices");
  if (!is_zero_one(vertices)) throw Error("not a (0,1)-polytope");
  const std::size_t d = vertices[0].size();
  std::set<LatticePoint> all(vertices.begin(), vertices.end());

  auto project = [&](const std::vector<std::size_t>& coords) {
    std::set<LatticePoint> out;
    for (const auto& v : all) {
      LatticePoint p;
      for (auto c : coords) p.push_back(v[c]);
      out.insert(p);
    }
    return out;
  };

  ProductDecomposition out;
  out.ambient_dim = d;
  std::vector<std::size_t> varying;
  for (std::size_t i = 0; i < d; ++i) {
    if (project({i}).size() == 1)
      out.factors.push_back({{i}, {}});
    else
      varying.push_back(i);
  }

  // Coordinates whose pairwise projection is not a square must share a factor.
  UnionFind uf(d);
  for (std::size_t a = 0; a < varying.size(); ++a)
    for (std::size_t b = a + 1; b < varying.size(); ++b)
      if (project({varying[a], varying[b]}).size() < 4) uf.unite(varying[a], varying[b]);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (auto i : varying) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> remaining;
  for (auto& [root, g] : groups) remaining.push_back(g);

  // Pairwise independence does not imply a product, so peel off the smallest
  // union of groups containing the first group that splits off exactly; a
  // smallest such union cannot split further.
  while (!remaining.empty()) {
    std::vector<std::size_t> rest_coords;
    for (const auto& g : remaining) rest_coords.insert(rest_coords.end(), g.begin(), g.end());
    const std::size_t total = project(rest_coords).size();
    const std::size_t m = remaining.size();
    std::vector<std::size_t> chosen_groups;
    for (std::size_t size = 1; size <= m && chosen_groups.empty(); ++size) {
      std::vector<bool> pick(m - 1, false);
      std::fill(pick.begin(), pick.begin() + (size - 1), true);
      do {
        std::vector<std::size_t> mine(remaining[0]), other;
        std::vector<std::size_t> idx{0};
        for (std::size_t j = 1; j < m; ++j) {
          auto& target = pick[j - 1] ? mine : other;
          target.insert(target.end(), remaining[j].begin(), remaining[j].end());
          if (pick[j - 1]) idx.push_back(j);
        }
        std::sort(mine.begin(), mine.end());
        std::sort(other.begin(), other.end());
        std::size_t product = project(mine).size() * (other.empty() ? 1 : project(other).size());
        if (product == total) {
          chosen_groups = idx;
          break;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    std::vector<std::size_t> coords;
    std::vector<std::vector<std::size_t>> next;
    for (std::size_t j = 0; j < m; ++j) {
      if (std::find(chosen_groups.begin(), chosen_groups.end(), j) != chosen_groups.end())
        coords.insert(coords.end(), remaining[j].begin(), remaining[j].end());
      else
        next.push_back(remaining[j]);
    }
    std::sort(coords.begin(), coords.end());
    out.factors.push_back({coords, {}});
    remaining = std::move(next);
  }

  for (auto& f : out.factors) {
    auto proj = project(f.coordinates);
    f.vertices.assign(proj.begin(), proj.end());
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const ProductFactor& a, const ProductFactor& b) { return a.coordinates < b.coordinates; });
  return out;
}

std::vector<LatticePoint> reassemble(const ProductDecomposition& d) {
  std::vector<LatticePoint> points{LatticePoint(d.ambient_dim, 0)};
  for (const auto& f : d.factors) {
    std::vector<LatticePoint> next;
    for (const auto& p : points)
      for (const auto& v : f.vertices) {
        LatticePoint q = p;
        for (std::size_t i = 0; i < f.coordinates.size(); ++i) q[f.coordinates[i]] = v[i];
        next.push_back(q);
      }
    points = std::move(next);
  }
  std::sort(points.begin(), points.end());
  return points;
}

ZeroOneVerdict ng_01_check(const std::vector<LatticePoint>& vertices, const ZeroOneOptions& options) {
  ZeroOneVerdict out;
  out.decomposition = product_decompose_01(vertices);
  auto whole = project_to_full_dimension(vertices);
  if (whole.dim() == 0) throw Error("polytope is a single point");
  if (!options.assume_idp) {
    auto idp = is_idp(whole.projected);
    if (!idp.holds) throw Error("polytope is not IDP (fails at height " +
                                std::to_string(*idp.failing_height) + ")");
  }
  std::vector<long> codegrees;
  bool all_gorenstein = true;
  for (const auto& f : out.decomposition.factors) {
    if (f.trivial()) continue;
    out.factors.push_back(factor_report(f.coordinates, f.vertices));
    all_gorenstein = all_gorenstein && out.factors.back().gorenstein.holds;
    codegrees.push_back(out.factors.back().gorenstein.codegree);
  }
  out.formula = all_gorenstein && codegrees_within_one(codegrees);
  if (whole.dim() <= options.engine_dim_cap) {
    NGOptions ng;
    ng.assume_idp = true;  // verified above or known to the caller
    out.engine = is_nearly_gorenstein(whole.projected, ng);
  }
  return out;
}

std::vector<std::vector<LatticePoint>> random_idp_01_polytopes(std::uint64_t seed, std::size_t count,
                                                               std::size_t max_dim) {
  if (max_dim < 2 || max_dim > 5) throw Error("random (0,1)-polytopes need 2 <= max_dim <= 5");
  std::mt19937_64 rng(seed);
  auto random_subset = [&](std::size_t d) {
    const std::size_t corners = std::size_t{1} << d;
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << corners) - 1);
    while (true) {
      std::uint64_t mask = bits(rng);
      std::vector<LatticePoint> points;
      for (std::size_t v = 0; v < corners; ++v)
        if (mask >> v & 1) {
          LatticePoint p(d);
          for (std::size_t i = 0; i < d; ++i) p[i] = v >> i & 1;
          points.push_back(p);
        }
      if (points.size() >= 2) return points;
    }
  };
  std::vector<std::vector<LatticePoint>> out;
  std::uniform_int_distribution<std::size_t> dim(2, max_dim);
  while (out.size() < count) {
    std::vector<LatticePoint> vertices;
    if (out.size() % 2 == 0) {
      std::size_t d = dim(rng);
      std::uniform_int_distribution<std::size_t> split(1, d - 1);
      std::size_t first = split(rng);
      auto a = random_subset(first), b = random_subset(d - first);
      for (const auto& x : a)
        for (const auto& y : b) {
          LatticePoint z = x;
          z.insert(z.end(), y.begin(), y.end());
          vertices.push_back(z);
        }
    } else {
      vertices = random_subset(dim(rng));
    }
    // every point of a (0,1) set is a vertex of its hull
    auto proj = project_to_full_dimension(vertices);
    if (proj.dim() == 0 || !is_idp(proj.projected).holds) continue;
    out.push_back(std::move(vertices));
  }
  return out;
}

std::string to_string(LevelStatus s) {
  switch (s) {
    case LevelStatus::level: return "level";
    case LevelStatus::not_level: return "not_level";
    case LevelStatus::unknown: return "unknown";
  }
  return "unknown";
}

LevelResult is_level(const Polytope& p, std::optional<long> degree_bound) {
  require_lattice_polytope(p);
  const long d = static_cast<long>(p.ambient_dim());
  LevelResult out;
  out.codegree = codegree(p);
  // Canonical module generators of a Cohen-Macaulay standard graded ring of
  // dimension d+1 live in degrees a..d+1.
  const long bound = degree_bound.value_or(d + 1);
  out.horizon = std::max(bound + 1, out.codegree);
  auto points = lattice_points(p);
  LatticePointSet previous = int_slice(p, out.codegree - 1);
  for (long k = out.codegree; k <= out.horizon; ++k) {
    auto current = int_slice(p, k);
    std::size_t count = 0;
    for (const auto& z : current) {
      bool generator = true;
      for (const auto& y : points) {
        LatticePoint diff(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) diff[i] = z[i] - y[i];
        if (previous.contains(diff)) {
          generator = false;
          break;
        }
      }
      if (!generator) continue;
      ++count;
      if (k > out.codegree && !out.extra_generator) {
        out.extra_generator = z;
        out.extra_degree = k;
      }
    }
    out.generator_counts.push_back({k, count});
    previous = std::move(current);
  }
  if (out.extra_generator)
    out.status = LevelStatus::not_level;
  else
    out.status = bound >= d + 1 ? LevelStatus::level : LevelStatus::unknown;
  return out;
}

Poset::Poset(std::size_t size, const EdgeList& relations)
    : size_(size), less_(size, std::vector<bool>(size, false)) {
  for (auto [a, b] : relations) {
    if (a >= size || b >= size) throw Error("poset relation out of range");
    if (a == b) throw Error("poset relation " + std::to_string(a) + " < " + std::to_string(a));
    less_[a][b] = true;
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (less_[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (less_[k][j]) less_[i][j] = true;
  for (std::size_t i = 0; i < size; ++i)
    if (less_[i][i]) throw Error("poset relations contain a cycle through " + std::to_string(i));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      if (!less_[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < size && cover; ++c)
        if (less_[a][c] && less_[c][b]) cover = false;
      if (cover) covers_.push_back({a, b});
    }
}

std::vector<std::vector<std::size_t>> Poset::components() const {
  return Multigraph(size_, covers_).components();
}

Polytope order_polytope(const Poset& poset) {
  const std::size_t n = poset.size();
  // a topological order, so ideals can be grown element by element
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t below_a = 0, below_b = 0;
    for (std::size_t c = 0; c < n; ++c) {
      below_a += poset.less(c, a);
      below_b += poset.less(c, b);
    }
    return below_a < below_b;
  });
  std::vector<LatticePoint> ideals;
  LatticePoint current(n, 0);
  std::function<void(std::size_t)> grow = [&](std::size_t i) {
    if (i == n) {
      ideals.push_back(current);
      return;
    }
    std::size_t e = order[i];
    grow(i + 1);
    bool allowed = true;
    for (std::size_t c = 0; c < n; ++c)
      if (poset.less(c, e) && !current[c]) allowed = false;
    if (allowed) {
      current[e] = 1;
      grow(i + 1);
      current[e] = 0;
    }
  };
  grow(0);
  return Polytope::from_points(ideals, n);
}

ComponentFormula hibi_ng_formula(const Poset& poset) {
  const std::size_t n = poset.size();
  // shortest and longest chains from a minimal element, along covers
  std::vector<long> lo(n, 0), hi(n, 0);
  std::vector<std::size_t> order(n), depth(n, 0);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) depth[a] += poset.less(b, a);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return depth[a] != depth[b] ? depth[a] < depth[b] : a < b;
  });
  std::vector<bool> has_lower(n, false), has_upper(n, false);
  for (auto [a, b] : poset.covers()) has_lower[b] = has_upper[a] = true;
  for (auto v : order) {
    if (!has_lower[v]) continue;
    lo[v] = std::numeric_limits<long>::max();
    hi[v] = 0;
    for (auto [a, b] : poset.covers())
      if (b == v) {
        lo[v] = std::min(lo[v], lo[a] + 1);
        hi[v] = std::max(hi[v], hi[a] + 1);
      }
  }
  ComponentFormula out;
  std::vector<long> ranks;
  bool pure_all = true;
  for (const auto& comp : poset.components()) {
    std::optional<long> rank;
    bool pure = true;
    for (auto v : comp) {
      if (has_upper[v]) continue;
      if (lo[v] != hi[v] || (rank && *rank != hi[v])) pure = false;
      rank = hi[v];
    }
    if (pure) {
      out.invariants.push_back(rank);
      ranks.push_back(*rank);
    } else {
      out.invariants.push_back(std::nullopt);
      pure_all = false;
    }
  }
  out.nearly_gorenstein = pure_all && codegrees_within_one(ranks);
  return out;
}

Polytope stable_set_polytope(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<LatticePoint> sets;
  LatticePoint current(n, 0);
  std::function<void(std::size_t, std::uint64_t)> grow = [&](std::size_t i, std::uint64_t blocked) {
    if (i == n) {
      sets.push_back(current);
      return;
    }
    grow(i + 1, blocked);
    if (!(blocked >> i & 1)) {
      current[i] = 1;
      grow(i + 1, blocked | g.neighbours(i));
      current[i] = 0;
    }
  };
  grow(0, 0);
  return Polytope::from_points(sets, n);
}

ComponentFormula stab_ng_formula(const SimpleGraph& g) {
  // maximal cliques by Bron-Kerbosch with pivoting
  std::vector<std::uint64_t> cliques;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
      [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (!p && !x) {
          cliques.push_back(r);
          return;
        }
        std::size_t pivot = static_cast<std::size_t>(__builtin_ctzll(p | x));
        for (auto v : mask_to_list(p & ~g.neighbours(pivot))) {
          std::uint64_t bit = std::uint64_t{1} << v;
          expand(r | bit, p & g.neighbours(v), x & g.neighbours(v));
          p &= ~bit;
          x |= bit;
        }
      };
  const std::size_t n = g.vertex_count();
  expand(0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);

  ComponentFormula out;
  std::vector<long> sizes;
  bool pure_all = true;
  for (const auto& comp : g.components()) {
    std::uint64_t mask = 0;
    for (auto v : comp) mask |= std::uint64_t{1} << v;
    std::optional<long> size;
    bool pure = true;
    for (auto c : cliques) {
      if (!(c & mask)) continue;
      long s = __builtin_popcountll(c);
      if (size && *size != s) pure = false;
      size = s;
    }
    out.invariants.push_back(pure ? size : std::nullopt);
    if (pure)
      sizes.push_back(*size);
    else
      pure_all = false;
  }
  out.nearly_gorenstein = pure_all && codegrees_within_one(sizes);
  return out;
}

void validate_matroid(const MatroidBases& m) {
  if (m.bases.empty()) throw Error("a matroid needs at least one basis");
  std::set<std::vector<std::size_t>> family;
  for (const auto& b : m.bases) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] >= m.ground_size) throw Error("basis element out of range in " + list_to_string(b));
      if (i && b[i] <= b[i - 1]) throw Error("basis " + list_to_string(b) + " is not strictly sorted");
    }
    family.insert(b);
  }
  for (const auto& a : family)
    for (const auto& b : family) {
      if (a == b) continue;
      for (auto x : a) {
        if (std::binary_search(b.begin(), b.end(), x)) continue;
        bool exchanged = false;
        for (auto y : b) {
          if (std::binary_search(a.begin(), a.end(), y)) continue;
          std::vector<std::size_t> c;
          for (auto z : a)
            if (z != x) c.push_back(z);
          c.insert(std::upper_bound(c.begin(), c.end(), y), y);
          if (family.count(c)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged)
          throw Error("basis exchange fails for " + list_to_string(a) + " and " + list_to_string(b) +
                      " at element " + std::to_string(x));
      }
    }
}

std::vector<std::vector<std::size_t>> spanning_trees(const Multigraph& g, std::size_t cap) {
  if (!g.is_connected()) throw Error("spanning trees of a disconnected graph");
  const std::size_t n = g.vertex_count(), m = g.edges().size();
  std::vector<std::vector<std::size_t>> out;
  if (n <= 1) return {{}};
  std::vector<std::size_t> chosen;

  auto still_connectable = [&](UnionFind uf, std::size_t from) {
    for (std::size_t j = from; j < m; ++j) uf.unite(g.edges()[j].first, g.edges()[j].second);
    for (std::size_t v = 1; v < n; ++v)
      if (uf.find(v) != uf.find(0)) return false;
    return true;
  };
  // Each edge is either contracted into the tree or deleted.
  std::function<void(std::size_t, UnionFind&)> recurse = [&](std::size_t i, UnionFind& uf) {
    if (chosen.size() == n - 1) {
      if (out.size() >= cap)
        throw Error("more than " + std::to_string(cap) + " spanning trees");
      out.push_back(chosen);
      return;
    }
    if (i == m || n - 1 - chosen.size() > m - i) return;
    auto [u, v] = g.edges()[i];
    if (uf.find(u) != uf.find(v)) {
      UnionFind contracted = uf;
      contracted.unite(u, v);
      chosen.push_back(i);
      recurse(i + 1, contracted);
      chosen.pop_back();
    }
    if (still_connectable(uf, i + 1)) recurse(i + 1, uf);
  };
  UnionFind uf(n);
  recurse(0, uf);
  return out;
}

MatroidBases graphic_matroid(const Multigraph& g) {
  MatroidBases m;
  m.ground_size = g.edges().size();
  std::vector<std::vector<std::size_t>> forests{{}};
  for (const auto& comp : g.components()) {
    if (comp.size() == 1) continue;
    std::map<std::size_t, std::size_t> label;
    for (std::size_t i = 0; i < comp.size(); ++i) label[comp[i]] = i;
    EdgeList edges;
    std::vector<std::size_t> ids;
    for (std::size_t e = 0; e < g.edges().size(); ++e)
      if (label.count(g.edges()[e].first)) {
        edges.push_back({label[g.edges()[e].first], label[g.edges()[e].second]});
        ids.push_back(e);
      }
    auto trees = spanning_trees(Multigraph(comp.size(), edges));
    std::vector<std::vector<std::size_t>> next;
    for (const auto& f : forests)
      for (const auto& t : trees) {
        auto combined = f;
        for (auto e : t) combined.push_back(ids[e]);
        std::sort(combined.begin(), combined.end());
        next.push_back(combined);
      }
    forests = std::move(next);
  }
  m.bases = std::move(forests);
  std::sort(m.bases.begin(), m.bases.end());
  return m;
}

ProjectedPolytope base_polytope(const MatroidBases& m) {
  validate_matroid(m);
  std::vector<LatticePoint> vertices;
  for (const auto& b : m.bases) {
    LatticePoint v(m.ground_size, 0);
    for (auto e : b) v[e] = 1;
    vertices.push_back(v);
  }
  return project_to_full_dimension(vertices);
}

ProjectedPolytope base_polytope(const Multigraph& g) { return base_polytope(graphic_matroid(g)); }

bool base_polytope_axiom_check(const Polytope& p) {
  if (p.is_empty() || !p.is_lattice()) return false;
  auto vertices = p.lattice_vertices();
  if (!is_zero_one(vertices)) return false;
  auto sum = [](const LatticePoint& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  const std::int64_t h = sum(vertices[0]);
  if (h <= 0) return false;
  for (const auto& v : vertices)
    if (sum(v) != h) return false;
  for (auto e : edges(p)) {
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < vertices[0].size(); ++i) {
      auto diff = vertices[e.second][i] - vertices[e.first][i];
      plus += diff == 1;
      minus += diff == -1;
    }
    if (plus != 1 || minus != 1) return false;
  }
  return true;
}

std::vector<Block> blocks(const Multigraph& g) {
  const std::size_t n = g.vertex_count(), m = g.edges().size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(n);  // neighbour, edge
  for (std::size_t e = 0; e < m; ++e) {
    incident[g.edges()[e].first].push_back({g.edges()[e].second, e});
    incident[g.edges()[e].second].push_back({g.edges()[e].first, e});
  }
  std::vector<long> order(n, -1), low(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> groups;
  long counter = 0;
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t v, std::size_t via) {
    order[v] = low[v] = counter++;
    for (auto [w, e] : incident[v]) {
      if (e == via) continue;
      if (order[w] < 0) {
        stack.push_back(e);
        visit(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= order[v]) {
          std::vector<std::size_t> group;
          while (true) {
            std::size_t top = stack.back();
            stack.pop_back();
            group.push_back(top);
            if (top == e) break;
          }
          groups.push_back(group);
        }
      } else if (order[w] < order[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], order[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (order[v] < 0) visit(v, m);

  std::vector<Block> out;
  for (auto& ids : groups) {
    std::sort(ids.begin(), ids.end());
    std::set<std::size_t> verts;
    for (auto e : ids) {
      verts.insert(g.edges()[e].first);
      verts.insert(g.edges()[e].second);
    }
    Block b;
    b.vertices.assign(verts.begin(), verts.end());
    b.edge_ids = ids;
    EdgeList edges;
    for (auto e : ids) {
      auto lu = std::lower_bound(b.vertices.begin(), b.vertices.end(), g.edges()[e].first);
      auto lv = std::lower_bound(b.vertices.begin(), b.vertices.end(), g.edges()[e].second);
      edges.push_back({static_cast<std::size_t>(lu - b.vertices.begin()),
                       static_cast<std::size_t>(lv - b.vertices.begin())});
    }
    b.graph = Multigraph(b.vertices.size(), edges);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.edge_ids < b.edge_ids; });
  return out;
}

GraphicMatroidVerdict ng_graphic_matroid(const Multigraph& g, std::size_t engine_dim_cap) {
  GraphicMatroidVerdict out;
  std::vector<long> codegrees;
  bool all_gorenstein = true;
  for (auto& b : blocks(g)) {
    if (b.edge_ids.size() == 1) continue;  // a bridge lies in every basis
    auto poly = base_polytope(b.graph);
    BlockReport r{std::move(b), poly.dim(), is_gorenstein(poly.projected)};
    all_gorenstein = all_gorenstein && r.gorenstein.holds;
    codegrees.push_back(r.gorenstein.codegree);
    out.blocks.push_back(std::move(r));
  }
  if (out.blocks.empty()) throw Error("base polytope is a single point (the graph is a forest)");
  out.formula = all_gorenstein && codegrees_within_one(codegrees);
  auto whole = base_polytope(g);
  ZeroOneOptions options;
  options.assume_idp = true;  // base polytopes are IDP
  options.engine_dim_cap = engine_dim_cap;
  out.zero_one = ng_01_check(whole.original.lattice_vertices(), options);
  return out;
}

}  // namespace ngpoly
