#pragma once

#include <vector>

#include "fermat/algebra/integer_matrix.hpp"
#include "fermat/algebra/lattice.hpp"

namespace fermat {

/// Torus {u in U(1)^g : prod u_i^{v_i} = 1 for v in relations}.  Row i of the
/// parametrization gives the character of coordinate i in the free variables.
struct TorusEmbedding {
  int g = 0;
  Lattice relations{0};
  int free_rank = 0;
  std::vector<int> free_coordinates;  // 1-based; empty when the basis is not coordinate-aligned
  IntegerMatrix parametrization;      // g x free_rank
};

/// Relation lattice of a parametrization: {v : v^T P = 0}.
Lattice relation_lattice(const IntegerMatrix& parametrization);

/// Builds the embedding from a relation lattice, solving for the highest-index
/// coordinates first.
TorusEmbedding torus_from_relations(const Lattice& relations);

/// Saturated lattice generated by 1_a - 1_b over all Hodge monomials (a|b).
Lattice hodge_relation_lattice(int m);

TorusEmbedding hodge_torus(int m);

/// True iff, in every codimension, the monomials fixed by the torus are
/// exactly the Hodge monomials.
bool fixed_monomials_match(int m, const IntegerMatrix& parametrization);

}  // namespace fermat
