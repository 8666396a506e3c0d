#pragma once

#include <cstddef>
#include <vector>

#include "ngpoly/arith.hpp"

namespace ngpoly {

/// Row-major matrices.
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<PointQ>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
/// Reduced row echelon form over Q.
RowEchelon row_echelon(const RatMatrix& m, std::size_t cols);
std::size_t rank(const IntMatrix& m);
/// Throws Error if the matrix is singular.
RatMatrix inverse(const RatMatrix& m);

/// Basis of the rational null space {x : m x = 0}, scaled to primitive
/// integer vectors. `cols` is needed when m has no rows.
IntMatrix integer_nullspace(const RatMatrix& m, std::size_t cols);

struct Primitive {
  IntVector vector;
  Integer scale;
};

/// v = scale * vector with vector primitive and scale > 0.
Primitive primitivize(const IntVector& v);

struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Row-style Hermite normal form: U * M = H with U unimodular. H is in
/// row echelon form, every pivot is positive and the entries above a
/// pivot p lie in [0, p). Zero rows are at the bottom.
HermiteForm hermite_normal_form(const IntMatrix& m);

/// A full-rank lattice L in Q^d given by d generators.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::vector<PointQ> generators);
  static LatticeBasis standard(std::size_t dim);

  std::size_t dim() const { return generators_.size(); }
  const std::vector<PointQ>& generators() const { return generators_; }
  const Rational& determinant() const { return determinant_; }

  /// Coordinates of x in this basis.
  PointQ coordinates(const PointQ& x) const;
  /// Inverse of coordinates().
  PointQ point(const PointQ& coords) const;

 private:
  std::vector<PointQ> generators_;
  RatMatrix inverse_;  // inverse of the matrix with the generators as columns
  Rational determinant_;
};

/// Maps points of L to Z^d through their basis coordinates. Throws if a
/// point is not in L.
std::vector<LatticePoint> lattice_normalize(const std::vector<PointQ>& points,
                                            const LatticeBasis& basis);

/// Lattice isomorphism between aff(S) ∩ Z^d and Z^k, k = dim aff(S):
///   project(x) = coords * (x - origin),  lift(y) = origin + basis * y.
struct AffineLatticeMap {
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  LatticePoint origin;
  IntMatrix basis;   // ambient_dim x dim, columns span the saturated lattice
  IntMatrix coords;  // dim x ambient_dim, coords * basis = identity

  bool is_identity() const;
  LatticePoint project(const LatticePoint& x) const;  // throws if x is off the lattice
  PointQ project(const PointQ& x) const;              // throws if x is off aff(S)
  LatticePoint lift(const LatticePoint& y) const;
  PointQ lift(const PointQ& y) const;
};

struct AffineProjection {
  std::vector<LatticePoint> points;
  AffineLatticeMap map;
};

/// Projects a nonempty point set onto its affine hull. Full-dimensional
/// inputs get the identity map.
AffineProjection affine_lattice_projection(const std::vector<LatticePoint>& points);

}  // namespace ngpoly
