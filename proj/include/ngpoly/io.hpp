#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "ngpoly/combinatorics.hpp"
#include "ngpoly/lattice.hpp"
#include "ngpoly/polytope.hpp"

namespace ngpoly {

// Line-oriented input formats; see docs/formats.md. Errors carry
// "<source>:<line>: " prefixes.

struct PolytopeInput {
  std::optional<std::string> name;
  std::size_t ambient_dim = 0;
  std::vector<PointQ> points;                // as written
  std::optional<std::vector<PointQ>> basis;  // LATTICE rows
  std::vector<LatticePoint> lattice_points;  // coordinates in the lattice
  AffineProjection projection;               // onto the affine hull
  Polytope polytope;                         // full-dimensional, in projected coordinates
};

PolytopeInput parse_polytope(std::istream& in, const std::string& source);
PolytopeInput read_polytope_file(const std::string& path);

struct GraphInput {
  bool simple = true;
  Multigraph graph;

  /// Throws unless the file declared a simple graph.
  SimpleGraph simple_graph() const;
};

GraphInput parse_graph(std::istream& in, const std::string& source);
GraphInput read_graph_file(const std::string& path);

Poset parse_poset(std::istream& in, const std::string& source);
Poset read_poset_file(const std::string& path);

/// Inequalities n(x) >= -h over a reflexive polytope's dual.
std::vector<Facet> parse_heights(std::istream& in, const std::string& source);
std::vector<Facet> read_heights_file(const std::string& path);

}  // namespace ngpoly
