#include "ngpoly/polytope.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ngpoly/cone.hpp"
#include "ngpoly/lattice.hpp"

namespace ngpoly {

namespace {

// Facets of a full-dimensional point set in Q^k, via the extreme rays of
// {(h, n) : h + n(p) >= 0 for every p}.
std::vector<Facet> full_dimensional_facets(const std::vector<PointQ>& points, std::size_t k) {
  IntMatrix rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    Integer q = common_denominator(p);
    IntVector row(k + 1);
    row[0] = q;
    for (std::size_t i = 0; i < k; ++i) row[i + 1] = Rational(p[i] * q).get_num();
    rows.push_back(std::move(row));
  }
  ConeGenerators gens = extreme_rays(rows, k + 1);
  if (!gens.lineality.empty()) throw Error("internal: point set is not full-dimensional");
  std::vector<Facet> facets;
  for (const auto& ray : gens.rays) {
    IntVector normal(ray.begin() + 1, ray.end());
    Integer g = content(normal);
    if (g == 0) continue;
    for (auto& x : normal) x /= g;
    facets.push_back({std::move(normal), make_rational(ray[0], g)});
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

// Drops points that are the midpoint of two other points along an axis.
std::vector<PointQ> prune_axis_midpoints(std::vector<PointQ> points) {
  if (points.size() <= 64) return points;
  for (const auto& p : points)
    if (!is_integral(p)) return points;
  std::vector<LatticePoint> lattice;
  lattice.reserve(points.size());
  for (const auto& p : points) lattice.push_back(to_lattice(p));
  std::set<LatticePoint> present(lattice.begin(), lattice.end());
  std::vector<PointQ> kept;
  for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
    LatticePoint q = lattice[idx];
    bool inner = false;
    for (std::size_t i = 0; i < q.size() && !inner; ++i) {
      q[i] += 1;
      bool up = present.count(q) > 0;
      q[i] -= 2;
      bool down = present.count(q) > 0;
      q[i] += 1;
      inner = up && down;
    }
    if (!inner) kept.push_back(std::move(points[idx]));
  }
  return kept;
}

IntMatrix tight_normals(const std::vector<Facet>& facets, const PointQ& x) {
  IntMatrix rows;
  for (const auto& f : facets)
    if (dot(f.normal, x) == -f.height) rows.push_back(f.normal);
  return rows;
}

std::vector<LatticePoint> set_difference(const std::vector<LatticePoint>& a,
                                         const std::vector<LatticePoint>& b) {
  std::vector<LatticePoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

LatticePointSet::LatticePointSet(std::size_t ambient_dim, std::vector<LatticePoint> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != ambient_dim_) throw Error("lattice point has wrong dimension");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticePointSet::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Polytope Polytope::empty(std::size_t ambient_dim) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  return p;
}

Polytope Polytope::from_points(const std::vector<LatticePoint>& points, std::size_t ambient_dim) {
  std::vector<PointQ> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_rational(p));
  return from_points(std::move(q), ambient_dim);
}

Polytope Polytope::from_points(std::vector<PointQ> points, std::size_t ambient_dim) {
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw Error("point has wrong dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope out = empty(ambient_dim);
  if (points.empty()) return out;
  const PointQ& origin = points.front();

  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    PointQ d(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) d[j] = points[i][j] - origin[j];
    diffs.push_back(std::move(d));
  }
  const auto chart = row_echelon(diffs, ambient_dim).pivot_columns;
  const std::size_t k = chart.size();
  out.dim_ = static_cast<int>(k);

  if (k < ambient_dim) {
    for (auto& n : integer_nullspace(diffs, ambient_dim)) {
      Rational h = -dot(n, origin);
      out.equations_.push_back({std::move(n), h});
    }
    std::sort(out.equations_.begin(), out.equations_.end());
  }
  if (k == 0) {
    out.vertices_.push_back(origin);
    return out;
  }

  auto candidates = prune_axis_midpoints(std::move(points));
  std::vector<PointQ> charted;
  charted.reserve(candidates.size());
  for (const auto& p : candidates) {
    PointQ c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = p[chart[i]];
    charted.push_back(std::move(c));
  }
  auto chart_facets = full_dimensional_facets(charted, k);

  for (std::size_t idx = 0; idx < candidates.size(); ++idx)
    if (rank(tight_normals(chart_facets, charted[idx])) == k)
      out.vertices_.push_back(candidates[idx]);

  for (auto& f : chart_facets) {
    IntVector normal(ambient_dim, 0);
    for (std::size_t i = 0; i < k; ++i) normal[chart[i]] = f.normal[i];
    out.facets_.push_back({std::move(normal), f.height});
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  return out;
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    if (!is_integral(v)) return false;
  return true;
}

std::vector<LatticePoint> Polytope::lattice_vertices() const {
  std::vector<LatticePoint> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(to_lattice(v));
  return out;
}

bool Polytope::contains(const PointQ& x) const {
  if (is_empty()) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) < -f.height) return false;
  for (const auto& e : equations_)
    if (dot(e.normal, x) != -e.height) return false;
  return true;
}

InequalitySystem Polytope::integer_system(bool strict) const {
  InequalitySystem sys(ambient_dim_);
  if (is_empty()) {
    sys.add_infeasible();
    return sys;
  }
  auto coeffs = [](const IntVector& n) {
    std::vector<std::int64_t> c;
    c.reserve(n.size());
    for (const auto& x : n) c.push_back(to_int64(x));
    return c;
  };
  for (const auto& f : facets_) {
    Rational rhs = -f.height;
    Integer bound = strict ? Integer(ngpoly::floor(rhs) + 1) : ngpoly::ceil(rhs);
    sys.add(coeffs(f.normal), to_int64(bound));
  }
  for (const auto& e : equations_) {
    Rational rhs = -e.height;
    if (!is_integral(rhs)) {
      sys.add_infeasible();
      continue;
    }
    sys.add_equation(coeffs(e.normal), to_int64(rhs));
  }
  return sys;
}

Box Polytope::bounding_box() const {
  Box box{LatticePoint(ambient_dim_, 0), LatticePoint(ambient_dim_, -1)};
  if (is_empty()) return box;
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    Rational lo = vertices_[0][i], hi = vertices_[0][i];
    for (const auto& v : vertices_) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    box.lower[i] = to_int64(ngpoly::ceil(lo));
    box.upper[i] = to_int64(ngpoly::floor(hi));
  }
  return box;
}

Polytope hull_facets(const std::vector<PointQ>& points) {
  if (points.empty()) throw Error("hull of an empty point set");
  const std::size_t d = points[0].size();
  Polytope p = Polytope::from_points(points, d);
  if (!p.is_full_dimensional())
    throw Error("point set has dimension " + std::to_string(p.dim()) + " in ambient dimension " +
                std::to_string(d) + "; apply affine_lattice_projection first");
  return p;
}

std::optional<std::vector<PointQ>> solve_vertices(const std::vector<Facet>& facets,
                                                  std::size_t ambient_dim) {
  IntMatrix rows;
  rows.reserve(facets.size() + 1);
  for (const auto& f : facets) {
    if (f.normal.size() != ambient_dim) throw Error("facet has wrong dimension");
    const Integer& den = f.height.get_den();
    IntVector row(ambient_dim + 1);
    row[0] = f.height.get_num();
    for (std::size_t i = 0; i < ambient_dim; ++i) row[i + 1] = f.normal[i] * den;
    rows.push_back(std::move(row));
  }
  IntVector t_nonneg(ambient_dim + 1, 0);
  t_nonneg[0] = 1;
  rows.push_back(std::move(t_nonneg));

  ConeGenerators gens = extreme_rays(rows, ambient_dim + 1);
  std::vector<PointQ> vertices;
  bool recession = !gens.lineality.empty();
  for (const auto& ray : gens.rays) {
    if (ray[0] == 0) {
      recession = true;
      continue;
    }
    PointQ v(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) v[i] = make_rational(ray[i + 1], ray[0]);
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) return std::nullopt;
  if (recession) throw Error("not a polytope: the inequality system is unbounded");
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

Polytope vertices_from_facets(const std::vector<Facet>& facets, std::size_t ambient_dim) {
  auto vertices = solve_vertices(facets, ambient_dim);
  if (!vertices) throw Error("inequality system is infeasible");
  return Polytope::from_points(std::move(*vertices), ambient_dim);
}

LatticePointSet lattice_points(const Polytope& p) {
  return {p.ambient_dim(), enumerate_lattice_points(p.integer_system(false), p.bounding_box())};
}

LatticePointSet interior_lattice_points(const Polytope& p) {
  return {p.ambient_dim(), enumerate_lattice_points(p.integer_system(true), p.bounding_box())};
}

LatticePointSet boundary_lattice_points(const Polytope& p) {
  auto all = lattice_points(p);
  auto inner = interior_lattice_points(p);
  return {p.ambient_dim(), set_difference(all.points(), inner.points())};
}

Polytope dilate(const Polytope& p, const Rational& k) {
  if (k <= 0) throw Error("dilation factor must be positive, got " + to_string(k));
  Polytope out = p;
  for (auto& v : out.vertices_)
    for (auto& x : v) x *= k;
  for (auto& f : out.facets_) f.height *= k;
  for (auto& e : out.equations_) e.height *= k;
  return out;
}

Polytope translate(const Polytope& p, const PointQ& v) {
  if (v.size() != p.ambient_dim()) throw Error("translation vector has wrong dimension");
  Polytope out = p;
  for (auto& x : out.vertices_)
    for (std::size_t i = 0; i < v.size(); ++i) x[i] += v[i];
  for (auto& f : out.facets_) f.height -= dot(f.normal, v);
  for (auto& e : out.equations_) e.height -= dot(e.normal, v);
  std::sort(out.facets_.begin(), out.facets_.end());
  std::sort(out.equations_.begin(), out.equations_.end());
  return out;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw Error("Minkowski sum of polytopes in dimensions " + std::to_string(p.ambient_dim()) +
                " and " + std::to_string(q.ambient_dim()));
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<PointQ> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      PointQ s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  return Polytope::from_points(std::move(sums), p.ambient_dim());
}

bool polytope_equal(const Polytope& p, const Polytope& q) { return p == q; }

Polytope polar_dual(const Polytope& p) {
  if (!p.is_full_dimensional()) throw Error("dual undefined: polytope is not full-dimensional");
  std::vector<PointQ> pts;
  for (const auto& f : p.facets()) {
    if (f.height <= 0) throw Error("dual undefined: origin is not an interior point");
    PointQ v(f.normal.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.normal[i] / f.height;
    pts.push_back(std::move(v));
  }
  return Polytope::from_points(std::move(pts), p.ambient_dim());
}

bool is_reflexive(const Polytope& p) {
  if (!p.is_full_dimensional() || !p.is_lattice()) return false;
  for (const auto& f : p.facets())
    if (f.height != 1) return false;
  return true;
}

std::vector<Edge> edges(const Polytope& p) {
  std::vector<Edge> out;
  if (p.dim() < 1) return out;
  const auto& verts = p.vertices();
  const auto& facets = p.facets();
  const std::size_t need = static_cast<std::size_t>(p.dim()) - 1;
  std::vector<std::vector<bool>> tight(verts.size(), std::vector<bool>(facets.size()));
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (std::size_t f = 0; f < facets.size(); ++f)
      tight[v][f] = dot(facets[f].normal, verts[v]) == -facets[f].height;
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      IntMatrix common;
      for (std::size_t f = 0; f < facets.size(); ++f)
        if (tight[a][f] && tight[b][f]) common.push_back(facets[f].normal);
      if (common.size() < need) continue;
      if (rank(common) == need) out.push_back({a, b});
    }
  }
  return out;
}

Integer lattice_edge_length(const PointQ& a, const PointQ& b) {
  if (!is_integral(a) || !is_integral(b)) throw Error("lattice length of a non-lattice segment");
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g = gcd(g, Integer(Rational(b[i] - a[i]).get_num()));
  return g;
}

Polytope product(const Polytope& p, const Polytope& q) {
  const std::size_t d = p.ambient_dim() + q.ambient_dim();
  if (p.is_empty() || q.is_empty()) return Polytope::empty(d);
  std::vector<PointQ> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      PointQ x = a;
      x.insert(x.end(), b.begin(), b.end());
      pts.push_back(std::move(x));
    }
  return Polytope::from_points(std::move(pts), d);
}

}  // namespace ngpoly
