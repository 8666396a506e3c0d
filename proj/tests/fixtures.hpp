#pragma once

#include <random>
#include <vector>

#include "ngpoly/lattice.hpp"
#include "ngpoly/polytope.hpp"

namespace fixtures {

using ngpoly::LatticePoint;
using ngpoly::Polytope;

inline Polytope hull(const std::vector<LatticePoint>& points) {
  return Polytope::from_points(points, points.at(0).size());
}

inline Polytope stop_sign() {
  return hull({{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}});
}

inline Polytope diamond() { return hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

inline Polytope counter_example() {
  return hull({{-4, -3, -4}, {-3, -1, -3}, {-2, -2, -3}, {0, 1, 4}, {0, 4, 1}, {3, 1, 1}});
}

inline Polytope prism() {
  return hull({{0, 0, 0}, {2, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 1}, {1, 1, 1}, {0, 1, 1}});
}

// Q from Z^6 + fZ, f = (1/3)(1,...,1), written in a basis of that lattice.
inline Polytope sublattice_q() {
  std::vector<ngpoly::PointQ> generators, vertices;
  for (int i = 0; i < 6; ++i) {
    ngpoly::PointQ e(6, 0);
    e[i] = 1;
    if (i < 5) generators.push_back(e);
    vertices.push_back(e);
    for (auto& x : e) x -= ngpoly::Rational(1, 3);
    vertices.push_back(e);
  }
  generators.push_back(ngpoly::PointQ(6, ngpoly::Rational(1, 3)));
  return hull(ngpoly::lattice_normalize(vertices, ngpoly::LatticeBasis(generators)));
}

inline Polytope cube(std::size_t d, long side = 1) {
  std::vector<LatticePoint> points;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticePoint p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i & 1) ? side : 0;
    points.push_back(p);
  }
  return hull(points);
}

inline Polytope centered_cube(std::size_t d) {
  std::vector<LatticePoint> points;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticePoint p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i & 1) ? 1 : -1;
    points.push_back(p);
  }
  return hull(points);
}

inline Polytope simplex(std::size_t d) {
  std::vector<LatticePoint> points{LatticePoint(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    LatticePoint e(d, 0);
    e[i] = 1;
    points.push_back(e);
  }
  return hull(points);
}

inline Polytope segment(long m) { return hull({{0}, {m}}); }

inline Polytope random_full_dimensional(std::mt19937_64& rng, std::size_t d, long radius,
                                        int max_points) {
  std::uniform_int_distribution<long> coord(-radius, radius);
  std::uniform_int_distribution<int> count(static_cast<int>(d) + 1, max_points);
  while (true) {
    std::vector<LatticePoint> points;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      LatticePoint p(d);
      for (auto& x : p) x = coord(rng);
      points.push_back(p);
    }
    Polytope p = Polytope::from_points(points, d);
    if (p.is_full_dimensional()) return p;
  }
}

// Mixed corpus used by the property suites.
inline std::vector<Polytope> corpus() {
  std::vector<Polytope> out{stop_sign(), diamond(), counter_example(), prism(),
                            centered_cube(2), segment(1), segment(3)};
  for (std::size_t d = 1; d <= 3; ++d) {
    out.push_back(cube(d));
    out.push_back(simplex(d));
  }
  out.push_back(cube(2, 2));
  out.push_back(hull({{0, 0}, {2, 0}, {0, 1}}));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) out.push_back(random_full_dimensional(rng, 2, 3, 8));
  for (int i = 0; i < 10; ++i) out.push_back(random_full_dimensional(rng, 3, 2, 8));
  return out;
}

}  // namespace fixtures
