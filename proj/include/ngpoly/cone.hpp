#pragma once

#include <cstddef>
#include <vector>

#include "ngpoly/lattice.hpp"

namespace ngpoly {

/// Generators of a polyhedral cone {y : A y >= 0}.
struct ConeGenerators {
  IntMatrix rays;       // extreme rays modulo the lineality space, primitive
  IntMatrix lineality;  // basis of the lineality space
};

/// Double description method (incremental, exact, combinatorial adjacency
/// test). `constraints` are the rows of A; `dim` is the number of columns.
ConeGenerators extreme_rays(const IntMatrix& constraints, std::size_t dim);

}  // namespace ngpoly
