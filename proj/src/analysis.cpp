#include "ngpoly/analysis.hpp"

#include <algorithm>
#include <set>

#include "ngpoly/lattice.hpp"

namespace ngpoly {

namespace {

std::vector<std::int64_t> coeffs(const IntVector& n) {
  std::vector<std::int64_t> c;
  c.reserve(n.size());
  for (const auto& x : n) c.push_back(to_int64(x));
  return c;
}

// Facets of {n_F(x) >= -(k h_F + offset)}.
std::vector<Facet> shifted_facets(const Polytope& p, long k, long offset) {
  std::vector<Facet> out;
  out.reserve(p.facets().size());
  for (const auto& f : p.facets()) out.push_back({f.normal, f.height * k + offset});
  return out;
}

struct Slice {
  InequalitySystem system;
  std::optional<Box> box;  // none when the region is empty
};

Slice make_slice(const Polytope& p, long k, long offset) {
  const std::size_t d = p.ambient_dim();
  auto facets = shifted_facets(p, k, offset);
  Slice s{InequalitySystem(d), std::nullopt};
  for (const auto& f : facets) s.system.add(coeffs(f.normal), to_int64(Rational(-f.height)));
  auto vertices = solve_vertices(facets, d);
  if (!vertices) return s;
  Box box{LatticePoint(d), LatticePoint(d)};
  for (std::size_t i = 0; i < d; ++i) {
    Rational lo = (*vertices)[0][i], hi = lo;
    for (const auto& v : *vertices) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    box.lower[i] = to_int64(ceil(lo));
    box.upper[i] = to_int64(floor(hi));
  }
  if (!box.empty()) s.box = box;
  return s;
}

LatticePointSet slice_points(const Polytope& p, long k, long offset) {
  auto s = make_slice(p, k, offset);
  if (!s.box) return {p.ambient_dim(), {}};
  return {p.ambient_dim(), enumerate_lattice_points(s.system, *s.box)};
}

bool slice_nonempty(const Polytope& p, long k, long offset) {
  auto s = make_slice(p, k, offset);
  if (!s.box) return false;
  return !for_each_lattice_point(s.system, *s.box, [](const LatticePoint&) { return false; });
}

Polytope hull_of(const LatticePointSet& s) {
  if (s.empty()) return Polytope::empty(s.ambient_dim());
  return Polytope::from_points(s.points(), s.ambient_dim());
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

void require_minkowski_hypothesis(const Polytope& p, const char* what) {
  if (!ng_necessary_minkowski(p))
    throw Error(std::string(what) + " requires P = floor(aP) + {P}, which fails for this polytope");
}

}  // namespace

void require_lattice_polytope(const Polytope& p) {
  if (p.is_empty() || !p.is_full_dimensional())
    throw Error("expected a full-dimensional polytope, got dimension " + std::to_string(p.dim()) +
                " in ambient dimension " + std::to_string(p.ambient_dim()));
  if (!p.is_lattice()) throw Error("expected a lattice polytope");
}

LatticePointSet int_slice(const Polytope& p, long k) {
  require_lattice_polytope(p);
  if (k < 0) throw Error("int_slice needs k >= 0");
  return slice_points(p, k, -1);
}

LatticePointSet ant_slice(const Polytope& p, long k) {
  require_lattice_polytope(p);
  return slice_points(p, k, 1);
}

long codegree(const Polytope& p) {
  require_lattice_polytope(p);
  const long d = static_cast<long>(p.ambient_dim());
  for (long k = 1; k <= d + 1; ++k)
    if (slice_nonempty(p, k, -1)) return k;
  throw Error("no interior lattice point in (d+1)P");
}

Polytope floor_polytope(const Polytope& p) { return floor_of_dilate(p, 1); }

Polytope floor_of_dilate(const Polytope& p, long k) { return hull_of(int_slice(p, k)); }

Polytope remainder_polytope(const Polytope& p) { return hull_of(ant_slice(p, 1 - codegree(p))); }

Polytope remainder_of_codegree_dilate(const Polytope& p) { return hull_of(ant_slice(p, 0)); }

bool ng_necessary_minkowski(const Polytope& p) {
  const long a = codegree(p);
  return polytope_equal(p, minkowski_sum(floor_of_dilate(p, a), remainder_polytope(p)));
}

LatticeDecomposition ng_lattice_decomposition(const Polytope& p) {
  const long a = codegree(p);
  auto floor_points = int_slice(p, a);
  auto remainder_points = ant_slice(p, 1 - a);
  LatticeDecomposition out;
  for (const auto& x : lattice_points(p)) {
    bool found = false;
    for (const auto& y : floor_points) {
      LatticePoint z = sub(x, y);
      if (remainder_points.contains(z)) {
        out.witnesses.push_back({x, y, z});
        found = true;
        break;
      }
    }
    if (!found) {
      out.witnesses.clear();
      out.counterexample = x;
      return out;
    }
  }
  auto system = p.integer_system();
  for (const auto& y : floor_points)
    for (const auto& z : remainder_points)
      if (!system.contains(add(y, z))) {
        out.witnesses.clear();
        out.counterexample = add(y, z);
        return out;
      }
  out.holds = true;
  return out;
}

long default_idp_bound(std::size_t dim) { return std::max<long>(2, static_cast<long>(dim) - 1); }

IdpResult is_idp(const Polytope& p, std::optional<long> bound) {
  require_lattice_polytope(p);
  IdpResult out;
  out.bound = bound.value_or(default_idp_bound(p.ambient_dim()));
  auto points = lattice_points(p);
  for (long k = 2; k <= out.bound; ++k) {
    auto target = make_slice(p, k, 0);
    auto previous = make_slice(p, k - 1, 0);
    std::optional<LatticePoint> bad;
    for_each_lattice_point(target.system, *target.box, [&](const LatticePoint& x) {
      for (const auto& y : points)
        if (previous.system.contains(sub(x, y))) return true;
      bad = x;
      return false;
    });
    if (bad) {
      out.failing_height = k;
      out.counterexample = bad;
      return out;
    }
  }
  out.holds = true;
  return out;
}

GorensteinResult is_gorenstein(const Polytope& p) {
  GorensteinResult out;
  out.codegree = codegree(p);
  auto inner = int_slice(p, out.codegree);
  if (inner.size() != 1) return out;
  const LatticePoint& v = inner[0];
  PointQ vq = to_rational(v);
  for (const auto& f : p.facets())
    if (dot(f.normal, vq) + out.codegree * f.height != 1) return out;
  out.holds = true;
  out.center = v;
  return out;
}

std::string to_string(NGStatus s) {
  switch (s) {
    case NGStatus::nearly_gorenstein: return "nearly_gorenstein";
    case NGStatus::gorenstein: return "gorenstein";
    case NGStatus::not_nearly_gorenstein: return "not_nearly_gorenstein";
    case NGStatus::unknown_bounded: return "unknown_bounded";
  }
  return "unknown_bounded";
}

std::vector<ConeHeightResult> cone_ng_check(const Polytope& p, long max_height) {
  if (max_height < 1) throw Error("cone check height bound must be at least 1");
  const long a = codegree(p);
  // A point at height k splits as (y, i) + (z, k - i) with y interior at
  // height i >= a and z in the anti-canonical piece at height k - i >= -a;
  // both pieces are empty outside that range.
  std::vector<LatticePointSet> interior;  // index i - a
  std::vector<Slice> interior_systems;
  for (long i = a; i <= max_height + a; ++i) {
    interior.push_back(slice_points(p, i, -1));
    interior_systems.push_back(make_slice(p, i, -1));
  }
  std::vector<LatticePointSet> anti;  // index j + a
  for (long j = -a; j <= max_height - a; ++j) anti.push_back(slice_points(p, j, 1));

  std::vector<ConeHeightResult> out;
  for (long k = 1; k <= max_height; ++k) {
    ConeHeightResult r{k, true, std::nullopt};
    auto level = make_slice(p, k, 0);
    for_each_lattice_point(level.system, *level.box, [&](const LatticePoint& x) {
      for (long i = a; i <= k + a; ++i) {
        const auto& ints = interior[i - a];
        const auto& ants = anti[k - i + a];
        if (ints.empty() || ants.empty()) continue;
        if (ints.size() <= ants.size()) {
          for (const auto& y : ints)
            if (ants.contains(sub(x, y))) return true;
        } else {
          for (const auto& z : ants)
            if (interior_systems[i - a].system.contains(sub(x, z))) return true;
        }
      }
      r.holds = false;
      r.violation = x;
      return false;
    });
    out.push_back(r);
    if (!r.holds) break;
  }
  return out;
}

NGVerdict is_nearly_gorenstein(const Polytope& p, const NGOptions& options) {
  require_lattice_polytope(p);
  NGVerdict v;
  v.gorenstein = is_gorenstein(p);
  v.codegree = v.gorenstein.codegree;
  if (v.gorenstein.holds) {
    v.status = NGStatus::gorenstein;
    return v;
  }
  // Height one of the cone criterion is exactly the lattice decomposition,
  // a necessary condition; it is cheap, so it goes before the IDP test.
  v.decomposition = ng_lattice_decomposition(p);
  v.checked_height = 1;
  if (!v.decomposition->holds) {
    v.status = NGStatus::not_nearly_gorenstein;
    v.violation = ConeViolation{1, *v.decomposition->counterexample};
    return v;
  }
  const std::size_t d = p.ambient_dim();
  if (options.assume_idp) {
    v.idp_assumed = true;
    v.status = NGStatus::nearly_gorenstein;
    return v;
  }
  v.idp = is_idp(p, options.idp_bound);
  const long sufficient = std::max<long>(1, static_cast<long>(d) - 1);
  if (v.idp->holds && v.idp->bound >= sufficient) {
    v.status = NGStatus::nearly_gorenstein;
    return v;
  }
  const long bound = options.height_bound.value_or(v.codegree + static_cast<long>(d));
  auto heights = cone_ng_check(p, bound);
  if (!heights.back().holds) {
    v.status = NGStatus::not_nearly_gorenstein;
    v.violation = ConeViolation{heights.back().height, *heights.back().violation};
    v.checked_height = heights.back().height;
    return v;
  }
  v.status = NGStatus::unknown_bounded;
  v.checked_height = bound;
  return v;
}

DilationBound dilation_threshold(const Polytope& p) {
  require_minkowski_hypothesis(p, "dilation_threshold");
  DilationBound out;
  out.codegree = codegree(p);
  out.edge_length = 0;
  Polytope q = remainder_of_codegree_dilate(p);
  for (const auto& e : edges(q))
    out.edge_length =
        std::max(out.edge_length, lattice_edge_length(q.vertices()[e.first], q.vertices()[e.second]));
  out.threshold = Integer(static_cast<long>(p.ambient_dim())) * out.edge_length + out.codegree;
  return out;
}

FacetIdentityResult floor_rem_facet_identity(const Polytope& p) {
  require_minkowski_hypothesis(p, "floor_rem_facet_identity");
  const long a = codegree(p);
  const std::size_t d = p.ambient_dim();
  auto region = [&](long k, long offset) {
    auto vertices = solve_vertices(shifted_facets(p, k, offset), d);
    return vertices ? Polytope::from_points(std::move(*vertices), d) : Polytope::empty(d);
  };
  FacetIdentityResult out;
  out.floor_matches = region(a, -1) == floor_of_dilate(p, a);
  Polytope rem = remainder_polytope(p);
  out.remainder_matches = region(1 - a, 1) == rem;
  if (a == 1) {
    auto inner = rem.is_full_dimensional() ? interior_lattice_points(rem) : LatticePointSet{};
    out.remainder_reflexive =
        inner.size() == 1 && is_reflexive(translate(rem, to_rational(sub(LatticePoint(d, 0), inner[0]))));
  }
  return out;
}

bool aP_decomposition_check(const Polytope& p) {
  require_minkowski_hypothesis(p, "aP_decomposition_check");
  const long a = codegree(p);
  Polytope rem_a = remainder_of_codegree_dilate(p);
  if (!polytope_equal(dilate(p, a), minkowski_sum(floor_of_dilate(p, a), rem_a))) return false;
  Polytope rem = remainder_polytope(p);
  Polytope expected = a == 1 ? rem : minkowski_sum(dilate(p, a - 1), rem);
  return polytope_equal(rem_a, expected);
}

bool dilate_identities_check(const Polytope& p, long k_max) {
  require_minkowski_hypothesis(p, "dilate_identities_check");
  const long a = codegree(p);
  Polytope rem = remainder_polytope(p);
  for (long k = 1; k <= k_max; ++k)
    if (!polytope_equal(dilate(p, k), minkowski_sum(floor_of_dilate(p, k + a - 1), rem)))
      return false;
  Polytope floor_a = floor_of_dilate(p, a);
  for (long k = a; k <= a + k_max; ++k) {
    Polytope expected = k == a ? floor_a : minkowski_sum(floor_a, dilate(p, k - a));
    if (!polytope_equal(floor_of_dilate(p, k), expected)) return false;
  }
  return true;
}

bool normals_on_reflexive_boundary(const Polytope& p, const NGVerdict& verdict) {
  if (!verdict.is_ng())
    throw Error("normals_on_reflexive_boundary requires a nearly Gorenstein polytope");
  Polytope q = remainder_of_codegree_dilate(p);
  std::set<IntVector> normals;
  for (const auto& f : p.facets()) {
    normals.insert(f.normal);
    Rational lowest = dot(f.normal, q.vertices()[0]);
    for (const auto& x : q.vertices()) lowest = std::min(lowest, dot(f.normal, x));
    if (lowest != -1) return false;
  }
  if (!is_reflexive(q)) return false;
  Polytope dual = polar_dual(q);
  for (const auto& v : dual.vertices()) {
    IntVector n;
    for (const auto& x : v) n.push_back(x.get_num());
    if (!normals.count(n)) return false;
  }
  return true;
}

ConstructionResult construct_candidate(const Polytope& q, const std::vector<Facet>& inequalities,
                                       const NGOptions& options) {
  require_lattice_polytope(q);
  if (!is_reflexive(q)) throw Error("Q is not reflexive");
  const std::size_t d = q.ambient_dim();
  Polytope dual = polar_dual(q);
  auto boundary = boundary_lattice_points(dual);

  std::set<IntVector> chosen;
  for (const auto& f : inequalities) {
    if (f.normal.size() != d) throw Error("inequality has wrong dimension");
    if (!is_integral(f.height)) throw Error("heights must be integers");
    LatticePoint n;
    for (const auto& x : f.normal) n.push_back(to_int64(x));
    if (!boundary.contains(n))
      throw Error("normal " + to_string(n) + " is not a boundary lattice point of Q^*");
    if (!chosen.insert(f.normal).second)
      throw Error("normal " + to_string(n) + " appears twice");
  }
  for (const auto& v : dual.vertices()) {
    IntVector n;
    for (const auto& x : v) n.push_back(x.get_num());
    if (!chosen.count(n))
      throw Error("vertex " + to_string(v) + " of Q^* is missing from the inequalities");
  }

  auto vertices = solve_vertices(inequalities, d);
  if (!vertices) throw Error("inequality system is infeasible");
  ConstructionResult out;
  out.base = Polytope::from_points(std::move(*vertices), d);
  if (!out.base.is_full_dimensional())
    throw Error("inequality system defines a polytope of dimension " +
                std::to_string(out.base.dim()));
  for (const auto& f : inequalities)
    if (!std::binary_search(out.base.facets().begin(), out.base.facets().end(), f))
      throw Error("redundant inequality " + to_string(to_rational(f.normal)) +
                  "(x) >= " + to_string(Rational(-f.height)));

  Integer denominators = 1;
  for (const auto& v : out.base.vertices()) denominators = lcm(denominators, common_denominator(v));
  const long step = to_int64(denominators);
  Polytope scaled;
  for (long j = 1;; ++j) {
    scaled = dilate(out.base, step * j);
    if (!int_slice(scaled, 1).empty()) {
      out.scale = step * j;
      break;
    }
  }
  if (!polytope_equal(remainder_polytope(scaled), q))
    throw Error("remainder polytope of the scaled candidate differs from Q");

  out.search_cap = ng_necessary_minkowski(scaled)
                       ? to_int64(dilation_threshold(scaled).threshold)
                       : 4 * static_cast<long>(d);
  for (long k = 1; k <= out.search_cap; ++k) {
    out.dilation = k;
    out.polytope = k == 1 ? scaled : dilate(scaled, k);
    out.verdict = is_nearly_gorenstein(out.polytope, options);
    if (out.verdict.is_ng()) return out;
  }
  out.verdict.status = NGStatus::unknown_bounded;
  return out;
}

}  // namespace ngpoly
