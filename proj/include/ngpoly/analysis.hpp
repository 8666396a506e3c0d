#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngpoly/polytope.hpp"

namespace ngpoly {

// All functions here take a full-dimensional lattice polytope P with facets
// n_F(x) >= -h_F and throw Error otherwise. `a` is the codegree of P.

void require_lattice_polytope(const Polytope& p);

/// Integer points of {n_F(x) >= -k h_F + 1}, the strict interior of kP.
LatticePointSet int_slice(const Polytope& p, long k);
/// Integer points of {n_F(x) >= -k h_F - 1}.
LatticePointSet ant_slice(const Polytope& p, long k);

/// Least k >= 1 with an interior lattice point in kP.
long codegree(const Polytope& p);

/// conv(int(P) ∩ Z^d); empty polytope when P has no interior lattice point.
Polytope floor_polytope(const Polytope& p);
/// conv(int(kP) ∩ Z^d) computed from the facets of P.
Polytope floor_of_dilate(const Polytope& p, long k);
/// conv(ant_slice(P, 1 - a)).
Polytope remainder_polytope(const Polytope& p);

/// P = ⌊aP⌋ + {P}.
bool ng_necessary_minkowski(const Polytope& p);

struct DecompositionWitness {
  LatticePoint point;
  LatticePoint floor_part;      // lexicographically smallest choice
  LatticePoint remainder_part;
};

struct LatticeDecomposition {
  bool holds = false;
  std::vector<DecompositionWitness> witnesses;
  /// A lattice point of P with no split, or a sum of parts outside P.
  std::optional<LatticePoint> counterexample;
};

/// P ∩ Z^d = (⌊aP⌋ ∩ Z^d) + ({P} ∩ Z^d).
LatticeDecomposition ng_lattice_decomposition(const Polytope& p);

struct IdpResult {
  bool holds = false;
  long bound = 0;
  std::optional<long> failing_height;
  std::optional<LatticePoint> counterexample;
};

/// max(2, d - 1); sufficient because the cone over P is generated in degrees
/// below d.
long default_idp_bound(std::size_t dim);
/// kP ∩ Z^d = (P ∩ Z^d) + ((k-1)P ∩ Z^d) for k = 2..bound.
IdpResult is_idp(const Polytope& p, std::optional<long> bound = std::nullopt);

struct GorensteinResult {
  bool holds = false;
  long codegree = 0;
  /// Interior point v of aP with aP - v reflexive.
  std::optional<LatticePoint> center;
};

GorensteinResult is_gorenstein(const Polytope& p);

enum class NGStatus { nearly_gorenstein, gorenstein, not_nearly_gorenstein, unknown_bounded };

std::string to_string(NGStatus s);

struct ConeViolation {
  long height = 0;
  LatticePoint point;
};

struct ConeHeightResult {
  long height = 0;
  bool holds = false;
  std::optional<LatticePoint> violation;
};

struct NGOptions {
  std::optional<long> height_bound;  // default a + d
  std::optional<long> idp_bound;     // default max(2, d - 1)
  /// Skip the IDP test because the caller knows P is IDP from theory.
  bool assume_idp = false;
};

struct NGVerdict {
  NGStatus status = NGStatus::unknown_bounded;
  long codegree = 0;
  /// Cone heights covered by the decision: 0 when Gorenstein, 1 when the
  /// degree-one criterion decides, otherwise the bound reached.
  long checked_height = 0;
  GorensteinResult gorenstein;
  std::optional<LatticeDecomposition> decomposition;
  std::optional<IdpResult> idp;
  bool idp_assumed = false;
  std::optional<ConeViolation> violation;

  bool is_ng() const {
    return status == NGStatus::nearly_gorenstein || status == NGStatus::gorenstein;
  }
};

/// Checks (C_P)_k ∩ Z^d ⊆ int(C_P)_i + ant(C_P)_{k-i} for k = 1..max_height.
/// Stops after the first failing height.
std::vector<ConeHeightResult> cone_ng_check(const Polytope& p, long max_height);

NGVerdict is_nearly_gorenstein(const Polytope& p, const NGOptions& options = {});

struct DilationBound {
  Integer edge_length;  // L: longest lattice edge of {aP}
  long codegree = 0;    // a
  Integer threshold;    // K = dL + a
};

/// Requires ng_necessary_minkowski(P).
DilationBound dilation_threshold(const Polytope& p);

struct FacetIdentityResult {
  bool floor_matches = false;
  bool remainder_matches = false;
  /// Reflexivity of {P} up to translation, checked when a = 1.
  std::optional<bool> remainder_reflexive;

  bool holds() const {
    return floor_matches && remainder_matches && remainder_reflexive.value_or(true);
  }
};

/// ⌊aP⌋ = {n_F(x) >= 1 - a h_F} and {P} = {n_F(x) >= (a-1)h_F - 1}.
/// Requires ng_necessary_minkowski(P).
FacetIdentityResult floor_rem_facet_identity(const Polytope& p);

/// aP = ⌊aP⌋ + {aP} and {aP} = (a-1)P + {P}. Requires ng_necessary_minkowski(P).
bool aP_decomposition_check(const Polytope& p);

/// kP = ⌊(k+a-1)P⌋ + {P} for k = 1..k_max and ⌊k'P⌋ = ⌊aP⌋ + (k'-a)P for
/// k' = a..a+k_max. Requires ng_necessary_minkowski(P).
bool dilate_identities_check(const Polytope& p, long k_max);

/// {aP}, the lattice points of {n_F(x) >= -1} in the hull; reflexive when P
/// satisfies the Minkowski condition.
Polytope remainder_of_codegree_dilate(const Polytope& p);

/// Every facet normal of P lies on the boundary of ({aP})^*, and the
/// vertices of ({aP})^* are among the normals. Requires `verdict.is_ng()`.
bool normals_on_reflexive_boundary(const Polytope& p, const NGVerdict& verdict);

struct ConstructionResult {
  Polytope base;       // P' from the chosen inequalities
  long scale = 0;      // r: rP' is a lattice polytope with an interior point
  long dilation = 0;   // k of the returned polytope k·rP'
  long search_cap = 0;
  Polytope polytope;   // k·rP'
  NGVerdict verdict;
};

/// Builds P' = {n(x) >= -h_n : n in S} over a reflexive Q and searches its
/// dilates for a nearly Gorenstein one.
ConstructionResult construct_candidate(const Polytope& q, const std::vector<Facet>& inequalities,
                                       const NGOptions& options = {});

}  // namespace ngpoly
