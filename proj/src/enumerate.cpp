#include "ngpoly/enumerate.hpp"

#include <algorithm>
#include <limits>

namespace ngpoly {

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

}  // namespace

bool Box::empty() const {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) return true;
  return false;
}

std::uint64_t Box::volume() const {
  if (empty()) return 0;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    auto len = static_cast<std::uint64_t>(upper[i] - lower[i]) + 1;
    if (v > cap / len) return cap;
    v *= len;
  }
  return v;
}

Box intersect(const Box& a, const Box& b) {
  Box out = a;
  for (std::size_t i = 0; i < a.lower.size(); ++i) {
    out.lower[i] = std::max(a.lower[i], b.lower[i]);
    out.upper[i] = std::min(a.upper[i], b.upper[i]);
  }
  return out;
}

void InequalitySystem::add(std::vector<std::int64_t> coeffs, std::int64_t rhs) {
  if (coeffs.size() != dim_) throw Error("inequality has wrong dimension");
  rows_.push_back({std::move(coeffs), rhs});
}

void InequalitySystem::add_equation(const std::vector<std::int64_t>& coeffs, std::int64_t rhs) {
  add(coeffs, rhs);
  std::vector<std::int64_t> neg(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  add(std::move(neg), -rhs);
}

void InequalitySystem::add_infeasible() { add(std::vector<std::int64_t>(dim_, 0), 1); }

bool InequalitySystem::contains(const LatticePoint& x) const {
  for (const auto& r : rows_) {
    i128 s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += static_cast<i128>(r.coeffs[i]) * x[i];
    if (s < r.rhs) return false;
  }
  return true;
}

bool for_each_lattice_point(const InequalitySystem& system, const Box& box,
                            const std::function<bool(const LatticePoint&)>& visit) {
  const std::size_t d = system.dim();
  if (box.lower.size() != d || box.upper.size() != d) throw Error("box has wrong dimension");
  if (box.empty()) return true;
  const auto& rows = system.rows();
  const std::size_t m = rows.size();

  // tail[r * (d + 1) + j] = max over the box of sum_{i >= j} coeffs[i] * x[i]
  std::vector<i128> tail(m * (d + 1), 0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = d; j-- > 0;) {
      i128 a = static_cast<i128>(rows[r].coeffs[j]) * box.lower[j];
      i128 b = static_cast<i128>(rows[r].coeffs[j]) * box.upper[j];
      tail[r * (d + 1) + j] = tail[r * (d + 1) + j + 1] + std::max(a, b);
    }
  }

  if (d == 0) {
    LatticePoint empty;
    return system.contains(empty) ? visit(empty) : true;
  }

  // prefix[j * m + r] = sum_{i < j} coeffs[i] * x[i]
  std::vector<i128> prefix((d + 1) * m, 0);
  LatticePoint x(d, 0);

  auto recurse = [&](auto&& self, std::size_t j) -> bool {
    i128 lo = box.lower[j], hi = box.upper[j];
    for (std::size_t r = 0; r < m && lo <= hi; ++r) {
      const i128 c = rows[r].coeffs[j];
      const i128 need = static_cast<i128>(rows[r].rhs) - prefix[j * m + r] -
                        tail[r * (d + 1) + j + 1];
      if (c > 0)
        lo = std::max(lo, ceil_div(need, c));
      else if (c < 0)
        hi = std::min(hi, floor_div(need, c));
      else if (need > 0)
        return true;
    }
    for (i128 v = lo; v <= hi; ++v) {
      x[j] = static_cast<std::int64_t>(v);
      if (j + 1 == d) {
        if (!visit(x)) return false;
        continue;
      }
      for (std::size_t r = 0; r < m; ++r)
        prefix[(j + 1) * m + r] = prefix[j * m + r] + static_cast<i128>(rows[r].coeffs[j]) * v;
      if (!self(self, j + 1)) return false;
    }
    return true;
  };
  return recurse(recurse, 0);
}

std::vector<LatticePoint> enumerate_lattice_points(const InequalitySystem& system,
                                                   const Box& box) {
  std::vector<LatticePoint> out;
  for_each_lattice_point(system, box, [&](const LatticePoint& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace ngpoly
