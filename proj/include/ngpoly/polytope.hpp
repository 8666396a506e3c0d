#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ngpoly/arith.hpp"
#include "ngpoly/enumerate.hpp"

namespace ngpoly {

/// The inequality normal(x) >= -height, normal a primitive integer form.
struct Facet {
  IntVector normal;
  Rational height;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.height < b.height;
  }
};

/// A sorted, duplicate-free set of integer points.
class LatticePointSet {
 public:
  LatticePointSet() = default;
  LatticePointSet(std::size_t ambient_dim, std::vector<LatticePoint> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const LatticePoint& p) const;
  const std::vector<LatticePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<LatticePoint> points_;
};

/// Convex polytope with rational vertices, stored in both representations.
/// Lower-dimensional polytopes carry the equations of their affine hull;
/// their facet inequalities involve only the coordinates of a chart onto
/// which the affine hull projects bijectively.
class Polytope {
 public:
  Polytope() = default;

  static Polytope empty(std::size_t ambient_dim);
  /// Convex hull of any finite point set.
  static Polytope from_points(std::vector<PointQ> points, std::size_t ambient_dim);
  static Polytope from_points(const std::vector<LatticePoint>& points, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// -1 for the empty polytope.
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool is_full_dimensional() const { return dim_ == static_cast<int>(ambient_dim_); }
  bool is_lattice() const;

  /// Sorted lexicographically.
  const std::vector<PointQ>& vertices() const { return vertices_; }
  /// Sorted; irredundant.
  const std::vector<Facet>& facets() const { return facets_; }
  /// normal(x) == -height for each entry.
  const std::vector<Facet>& equations() const { return equations_; }

  /// Throws unless is_lattice().
  std::vector<LatticePoint> lattice_vertices() const;
  bool contains(const PointQ& x) const;

  /// Integer points satisfying all constraints, strict facet inequalities
  /// when `strict` (relative interior).
  InequalitySystem integer_system(bool strict = false) const;
  /// Integer bounding box of the vertices.
  Box bounding_box() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend Polytope dilate(const Polytope&, const Rational&);
  friend Polytope translate(const Polytope&, const PointQ&);

  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<PointQ> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equations_;
};

/// Facet presentation of a full-dimensional point set. Throws for
/// lower-dimensional input: project it with affine_lattice_projection first.
Polytope hull_facets(const std::vector<PointQ>& points);

/// Vertices of {x : normal(x) >= -height for all facets}, or nullopt if the
/// system is infeasible. Throws "not a polytope" if it is unbounded.
std::optional<std::vector<PointQ>> solve_vertices(const std::vector<Facet>& facets,
                                                  std::size_t ambient_dim);

/// Polytope from an inequality system. Throws on unbounded or empty systems.
Polytope vertices_from_facets(const std::vector<Facet>& facets, std::size_t ambient_dim);

LatticePointSet lattice_points(const Polytope& p);
/// Points in the relative interior.
LatticePointSet interior_lattice_points(const Polytope& p);
LatticePointSet boundary_lattice_points(const Polytope& p);

/// Throws unless k > 0.
Polytope dilate(const Polytope& p, const Rational& k);
Polytope translate(const Polytope& p, const PointQ& v);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
bool polytope_equal(const Polytope& p, const Polytope& q);

/// {n : n(x) >= -1 for all x in P}. Requires the origin in the interior.
Polytope polar_dual(const Polytope& p);
/// Full-dimensional lattice polytope with every facet at height 1.
bool is_reflexive(const Polytope& p);

struct Edge {
  std::size_t first;   // vertex indices into vertices()
  std::size_t second;
};

/// 1-faces, found by the rank of the facets active at both endpoints.
std::vector<Edge> edges(const Polytope& p);
/// gcd of the coordinate differences of two lattice points.
Integer lattice_edge_length(const PointQ& a, const PointQ& b);

/// Product P x Q in the concatenated coordinates.
Polytope product(const Polytope& p, const Polytope& q);

}  // namespace ngpoly
