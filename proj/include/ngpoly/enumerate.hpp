#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ngpoly/arith.hpp"

namespace ngpoly {

/// coeffs · x >= rhs
struct LinearInequality {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;
};

struct Box {
  LatticePoint lower;
  LatticePoint upper;

  bool empty() const;
  /// Number of integer points, saturating at UINT64_MAX.
  std::uint64_t volume() const;
};

/// Box intersection; dimensions must agree.
Box intersect(const Box& a, const Box& b);

class InequalitySystem {
 public:
  explicit InequalitySystem(std::size_t dim) : dim_(dim) {}

  void add(std::vector<std::int64_t> coeffs, std::int64_t rhs);
  void add_equation(const std::vector<std::int64_t>& coeffs, std::int64_t rhs);
  /// A system with no integer solutions.
  void add_infeasible();

  std::size_t dim() const { return dim_; }
  const std::vector<LinearInequality>& rows() const { return rows_; }
  bool contains(const LatticePoint& x) const;

 private:
  std::size_t dim_;
  std::vector<LinearInequality> rows_;
};

/// Visits the integer points of `box` satisfying `system` in lexicographic
/// order. The search fixes coordinates left to right and cuts each range
/// with interval bounds derived from the remaining box. Returns false if
/// `visit` asked to stop.
bool for_each_lattice_point(const InequalitySystem& system, const Box& box,
                            const std::function<bool(const LatticePoint&)>& visit);

std::vector<LatticePoint> enumerate_lattice_points(const InequalitySystem& system,
                                                   const Box& box);

}  // namespace ngpoly
