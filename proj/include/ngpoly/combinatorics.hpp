#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ngpoly/analysis.hpp"
#include "ngpoly/lattice.hpp"
#include "ngpoly/polytope.hpp"

namespace ngpoly {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

/// Loop-free graph; parallel edges allowed. Edges keep their input order and
/// are referred to by index.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t vertex_count, EdgeList edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const EdgeList& edges() const { return edges_; }
  bool is_simple() const;
  /// Vertex sets of the connected components, each sorted, ordered by their
  /// smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool is_connected() const { return components().size() <= 1; }

 private:
  std::size_t vertex_count_ = 0;
  EdgeList edges_;
};

class SimpleGraph : public Multigraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t vertex_count, EdgeList edges);

  bool adjacent(std::size_t u, std::size_t v) const;
  /// Bit i of the result is set when i is adjacent to v.
  std::uint64_t neighbours(std::size_t v) const { return adjacency_.at(v); }

 private:
  std::vector<std::uint64_t> adjacency_;
};

/// A lattice polytope together with a lattice-preserving projection onto a
/// full-dimensional copy.
struct ProjectedPolytope {
  Polytope original;
  AffineLatticeMap map;
  Polytope projected;

  std::size_t dim() const { return map.dim; }
};

ProjectedPolytope project_to_full_dimension(const std::vector<LatticePoint>& vertices);

// Edge polytopes

/// conv{e_i + e_j : ij in E}. Throws for disconnected graphs.
ProjectedPolytope edge_polytope(const SimpleGraph& g);

struct OddCycleResult {
  bool holds = false;
  std::size_t odd_cycle_count = 0;  // distinct vertex sets of odd cycles
  /// Two vertex-disjoint odd cycles with no edge between them.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> violation;
};

OddCycleResult odd_cycle_condition(const SimpleGraph& g, std::size_t vertex_cap = 14);

/// Sides (n, m) with n <= m when g is complete bipartite.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_sides(const SimpleGraph& g);

struct EdgePolytopeVerdict {
  NGVerdict engine;
  bool gorenstein = false;
  bool is_k_n_n_plus_1 = false;
  bool formula = false;  // Gorenstein or K_{n,n+1} with n >= 2

  bool agree() const { return formula == engine.is_ng(); }
};

/// Requires a connected graph with the odd cycle condition, so P_G is IDP.
EdgePolytopeVerdict ng_edge_polytope(const SimpleGraph& g);

// (0,1)-polytopes

struct ProductFactor {
  std::vector<std::size_t> coordinates;
  std::vector<LatticePoint> vertices;  // projections onto `coordinates`

  bool trivial() const { return vertices.size() == 1; }
};

/// Finest coordinate partition with vert(P) the product of its projections.
struct ProductDecomposition {
  std::size_t ambient_dim = 0;
  std::vector<ProductFactor> factors;  // ordered by smallest coordinate
};

ProductDecomposition product_decompose_01(const std::vector<LatticePoint>& vertices);
/// The vertex set of the product of the factors, sorted.
std::vector<LatticePoint> reassemble(const ProductDecomposition& d);

struct FactorReport {
  std::vector<std::size_t> coordinates;
  std::size_t dim = 0;
  GorensteinResult gorenstein;
};

struct ZeroOneOptions {
  /// The caller knows P is IDP; otherwise it is verified.
  bool assume_idp = false;
  /// Run the cone engine on P itself when its dimension is at most this.
  std::size_t engine_dim_cap = 8;
};

struct ZeroOneVerdict {
  ProductDecomposition decomposition;
  std::vector<FactorReport> factors;  // nontrivial factors only
  bool formula = false;
  std::optional<NGVerdict> engine;

  bool agree() const { return !engine || engine->is_ng() == formula; }
};

/// NG iff every nontrivial factor is Gorenstein and their codegrees differ
/// by at most one. Requires an IDP (0,1)-polytope.
ZeroOneVerdict ng_01_check(const std::vector<LatticePoint>& vertices,
                           const ZeroOneOptions& options = {});

/// Random IDP (0,1)-polytopes of dimension 2..max_dim (before projection),
/// given by their vertices. Even positions are products of two random
/// factors, odd positions random vertex subsets of the cube.
std::vector<std::vector<LatticePoint>> random_idp_01_polytopes(std::uint64_t seed, std::size_t count,
                                                               std::size_t max_dim);

enum class LevelStatus { level, not_level, unknown };

std::string to_string(LevelStatus s);

struct LevelResult {
  LevelStatus status = LevelStatus::unknown;
  long codegree = 0;
  long horizon = 0;  // degrees a..horizon were scanned
  std::vector<std::pair<long, std::size_t>> generator_counts;  // degree, count
  std::optional<LatticePoint> extra_generator;
  std::optional<long> extra_degree;
};

/// Generators of the canonical module: z in int(kP) with z - p outside
/// int((k-1)P) for all p in P ∩ Z^d. Requires a full-dimensional IDP lattice
/// polytope.
LevelResult is_level(const Polytope& p, std::optional<long> degree_bound = std::nullopt);

// Order and stable set polytopes

class Poset {
 public:
  /// `relations` lists pairs (a, b) with a < b; the order is their
  /// transitive closure. Throws on cycles.
  Poset(std::size_t size, const EdgeList& relations);

  std::size_t size() const { return size_; }
  bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
  /// Pairs (a, b) with b covering a.
  const EdgeList& covers() const { return covers_; }
  std::vector<std::vector<std::size_t>> components() const;

 private:
  std::size_t size_;
  std::vector<std::vector<bool>> less_;
  EdgeList covers_;
};

/// Characteristic vectors of the order ideals.
Polytope order_polytope(const Poset& poset);

struct ComponentFormula {
  bool nearly_gorenstein = false;
  /// Per component: rank (longest chain, counted in edges) for posets or
  /// clique number for graphs; nullopt when the component is not pure.
  std::vector<std::optional<long>> invariants;
};

ComponentFormula hibi_ng_formula(const Poset& poset);

/// Characteristic vectors of stable sets. Perfection of g is the caller's
/// assertion.
Polytope stable_set_polytope(const SimpleGraph& g);
ComponentFormula stab_ng_formula(const SimpleGraph& g);

// Graphic matroids

struct MatroidBases {
  std::size_t ground_size = 0;
  std::vector<std::vector<std::size_t>> bases;  // each sorted
};

/// Throws with a witnessing pair when the exchange axiom fails.
void validate_matroid(const MatroidBases& m);

/// Edge index sets of all spanning trees, in lexicographic order.
std::vector<std::vector<std::size_t>> spanning_trees(const Multigraph& g,
                                                     std::size_t cap = 1000000);
/// Bases are the spanning forests.
MatroidBases graphic_matroid(const Multigraph& g);

ProjectedPolytope base_polytope(const MatroidBases& m);
ProjectedPolytope base_polytope(const Multigraph& g);

/// Constant coordinate sum and every edge parallel to some e_i - e_j.
bool base_polytope_axiom_check(const Polytope& p);

struct Block {
  std::vector<std::size_t> vertices;  // original labels, sorted
  std::vector<std::size_t> edge_ids;  // original edge indices, sorted
  Multigraph graph;                   // relabelled to 0..|vertices|-1
};

/// 2-connected components; a bridge is a block with one edge.
std::vector<Block> blocks(const Multigraph& g);

struct BlockReport {
  Block block;
  std::size_t dim = 0;  // dimension of the block's base polytope
  GorensteinResult gorenstein;
};

struct GraphicMatroidVerdict {
  std::vector<BlockReport> blocks;  // blocks with a nontrivial base polytope
  bool formula = false;
  ZeroOneVerdict zero_one;

  bool agree() const { return zero_one.formula == formula && zero_one.agree(); }
};

GraphicMatroidVerdict ng_graphic_matroid(const Multigraph& g, std::size_t engine_dim_cap = 8);

}  // namespace ngpoly
