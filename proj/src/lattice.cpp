#include "ngpoly/lattice.hpp"

#include <algorithm>
#include <utility>

namespace ngpoly {

namespace {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(ngpoly::to_rational(row));
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[row].size(); ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

void add_multiple(IntVector& target, const Integer& f, const IntVector& src) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] += f * src[j];
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw Error("matrix dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Rational determinant(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c].size() != n) throw Error("determinant of a non-square matrix");
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

std::size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  RatMatrix a = m;
  return rref(a, a[0].size()).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RowEchelon row_echelon(const RatMatrix& m, std::size_t cols) {
  RowEchelon out{m, {}};
  out.pivot_columns = rref(out.reduced, cols);
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  std::size_t n = m.size();
  RatMatrix aug(n, PointQ(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) throw Error("singular matrix");
  RatMatrix inv(n, PointQ(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

IntMatrix integer_nullspace(const RatMatrix& m, std::size_t cols) {
  RatMatrix a = m;
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  IntMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    PointQ x(cols, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
    Integer den = common_denominator(x);
    IntVector v;
    for (const auto& xi : x) v.push_back(Rational(xi * den).get_num());
    basis.push_back(primitivize(v).vector);
  }
  return basis;
}

Primitive primitivize(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error("zero normal");
  IntVector w;
  w.reserve(v.size());
  for (const auto& x : v) w.push_back(x / g);
  return {std::move(w), g};
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out;
  out.h = m;
  out.u = identity_matrix(m.size());
  auto& h = out.h;
  auto& u = out.u;
  std::size_t rows = h.size();
  std::size_t cols = rows ? h[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (h[i][c] == 0) continue;
      Integer a = h[row][c], b = h[i][c], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      // [[s, t], [-b/g, a/g]] has determinant 1.
      for (auto* mat : {&h, &u}) {
        IntVector& r0 = (*mat)[row];
        IntVector& r1 = (*mat)[i];
        for (std::size_t j = 0; j < r0.size(); ++j) {
          Integer x = r0[j], y = r1[j];
          r0[j] = s * x + t * y;
          r1[j] = ag * y - bg * x;
        }
      }
    }
    if (h[row][c] == 0) continue;
    if (h[row][c] < 0) {
      for (auto& x : h[row]) x = -x;
      for (auto& x : u[row]) x = -x;
    }
    const Integer p = h[row][c];
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      add_multiple(h[i], -q, h[row]);
      add_multiple(u[i], -q, u[row]);
    }
    out.pivot_columns.push_back(c);
    ++row;
  }
  out.rank = row;
  return out;
}

LatticeBasis::LatticeBasis(std::vector<PointQ> generators) : generators_(std::move(generators)) {
  std::size_t d = generators_.size();
  if (d == 0) throw Error("empty lattice basis");
  RatMatrix cols(d, PointQ(d));
  for (std::size_t j = 0; j < d; ++j) {
    if (generators_[j].size() != d) throw Error("lattice basis must be square");
    for (std::size_t i = 0; i < d; ++i) cols[i][j] = generators_[j][i];
  }
  determinant_ = ngpoly::determinant(cols);
  if (determinant_ == 0) throw Error("lattice basis is singular");
  inverse_ = inverse(cols);
}

LatticeBasis LatticeBasis::standard(std::size_t dim) {
  std::vector<PointQ> gens(dim, PointQ(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) gens[i][i] = 1;
  return LatticeBasis(std::move(gens));
}

PointQ LatticeBasis::coordinates(const PointQ& x) const {
  if (x.size() != dim()) throw Error("point dimension does not match lattice");
  PointQ c(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) c[i] = dot(inverse_[i], x);
  return c;
}

PointQ LatticeBasis::point(const PointQ& coords) const {
  PointQ x(dim(), 0);
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) x[i] += generators_[j][i] * coords[j];
  return x;
}

std::vector<LatticePoint> lattice_normalize(const std::vector<PointQ>& points,
                                            const LatticeBasis& basis) {
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    PointQ c = basis.coordinates(p);
    if (!is_integral(c)) throw Error("point " + to_string(p) + " is not in the lattice");
    out.push_back(to_lattice(c));
  }
  return out;
}

bool AffineLatticeMap::is_identity() const {
  if (dim != ambient_dim) return false;
  for (auto x : origin)
    if (x != 0) return false;
  return basis == identity_matrix(dim) && coords == identity_matrix(dim);
}

LatticePoint AffineLatticeMap::project(const LatticePoint& x) const {
  LatticePoint y = to_lattice(project(ngpoly::to_rational(x)));
  return y;
}

PointQ AffineLatticeMap::project(const PointQ& x) const {
  if (x.size() != ambient_dim) throw Error("point dimension does not match projection");
  PointQ diff(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) diff[i] = x[i] - static_cast<long>(origin[i]);
  PointQ y(dim, 0);
  for (std::size_t r = 0; r < dim; ++r) y[r] = dot(coords[r], diff);
  if (lift(y) != x) throw Error("point " + to_string(x) + " is off the affine hull");
  return y;
}

LatticePoint AffineLatticeMap::lift(const LatticePoint& y) const {
  return to_lattice(lift(ngpoly::to_rational(y)));
}

PointQ AffineLatticeMap::lift(const PointQ& y) const {
  if (y.size() != dim) throw Error("point dimension does not match projection");
  PointQ x(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    x[i] = static_cast<long>(origin[i]);
    for (std::size_t j = 0; j < dim; ++j) x[i] += basis[i][j] * y[j];
  }
  return x;
}

AffineProjection affine_lattice_projection(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw Error("affine projection of an empty point set");
  const std::size_t d = points[0].size();
  const LatticePoint origin = *std::min_element(points.begin(), points.end());

  IntMatrix diffs;
  for (const auto& p : points) {
    if (p.size() != d) throw Error("mixed point dimensions");
    if (p == origin) continue;
    IntVector row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = static_cast<long>(p[i] - origin[i]);
    diffs.push_back(std::move(row));
  }

  AffineLatticeMap map;
  map.ambient_dim = d;
  std::size_t r = rank(diffs);
  if (r == d) {
    map.dim = d;
    map.origin.assign(d, 0);
    map.basis = identity_matrix(d);
    map.coords = identity_matrix(d);
    return {points, std::move(map)};
  }

  // Normals of the affine hull: integer kernel of the difference matrix.
  IntMatrix normals;
  if (diffs.empty()) {
    normals = identity_matrix(d);
  } else {
    auto hf = hermite_normal_form(transpose(diffs));
    normals.assign(hf.u.begin() + static_cast<std::ptrdiff_t>(hf.rank), hf.u.end());
  }
  // Saturated lattice: integer kernel of the normals.
  IntMatrix lattice_rows;  // r x d
  {
    auto hf = hermite_normal_form(transpose(normals));
    lattice_rows.assign(hf.u.begin() + static_cast<std::ptrdiff_t>(hf.rank), hf.u.end());
  }
  map.dim = lattice_rows.size();
  map.origin = origin;
  map.basis = transpose(lattice_rows);
  if (map.dim == 0) {
    map.basis.assign(d, IntVector{});
    map.coords.clear();
  } else {
    auto hf = hermite_normal_form(map.basis);
    // A saturated basis has an identity top block in Hermite form.
    IntMatrix top(hf.h.begin(), hf.h.begin() + static_cast<std::ptrdiff_t>(map.dim));
    if (top != identity_matrix(map.dim)) throw Error("internal: lattice basis not saturated");
    map.coords.assign(hf.u.begin(), hf.u.begin() + static_cast<std::ptrdiff_t>(map.dim));
  }

  AffineProjection out;
  out.points.reserve(points.size());
  for (const auto& p : points) out.points.push_back(map.project(p));
  out.map = std::move(map);
  return out;
}

}  // namespace ngpoly
