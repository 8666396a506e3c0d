#include "ngpoly/cone.hpp"

#include <utility>

#include <boost/dynamic_bitset.hpp>

namespace ngpoly {

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct Ray {
  IntVector v;
  ZeroSet zeros;  // processed constraints that vanish on v
};

// val_a * x - val_x * a, made primitive
IntVector eliminate(const IntVector& x, const Integer& val_x, const IntVector& a,
                    const Integer& val_a) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = val_a * x[i] - val_x * a[i];
  return primitivize(out).vector;
}

}  // namespace

ConeGenerators extreme_rays(const IntMatrix& constraints, std::size_t dim) {
  const std::size_t m = constraints.size();
  IntMatrix lineality = identity_matrix(dim);
  std::vector<Ray> rays;

  for (std::size_t c = 0; c < m; ++c) {
    const IntVector& a = constraints[c];
    if (a.size() != dim) throw Error("constraint has wrong dimension");

    std::size_t pick = lineality.size();
    Integer pick_val;
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      pick_val = dot(a, lineality[i]);
      if (pick_val != 0) {
        pick = i;
        break;
      }
    }

    if (pick < lineality.size()) {
      IntVector l = std::move(lineality[pick]);
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pick));
      if (pick_val < 0) {
        for (auto& x : l) x = -x;
        pick_val = -pick_val;
      }
      for (auto& other : lineality) {
        Integer v = dot(a, other);
        if (v != 0) other = eliminate(other, v, l, pick_val);
      }
      for (auto& r : rays) {
        Integer v = dot(a, r.v);
        if (v != 0) r.v = eliminate(r.v, v, l, pick_val);
        r.zeros.set(c);
      }
      Ray fresh{std::move(l), ZeroSet(m)};
      for (std::size_t i = 0; i < c; ++i) fresh.zeros.set(i);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> vals(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(a, rays[i].v);
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] < 0)
        neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (vals[i] == 0) rays[i].zeros.set(c);
      continue;
    }

    const std::size_t min_common =
        dim >= lineality.size() + 2 ? dim - lineality.size() - 2 : 0;
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        ZeroSet common = rays[p].zeros & rays[n].zeros;
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{eliminate(rays[n].v, vals[n], rays[p].v, vals[p]), std::move(common)};
        fresh.zeros.set(c);
        next.push_back(std::move(fresh));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] < 0) continue;
      if (vals[i] == 0) rays[i].zeros.set(c);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace ngpoly
