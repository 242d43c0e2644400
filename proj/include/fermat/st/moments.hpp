#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fermat/algebra/integer_matrix.hpp"
#include "fermat/algebra/laurent.hpp"
#include "fermat/hodge/torus.hpp"

namespace fermat {

using Rational = mpq_class;

/// Signed permutation matrix acting on 2g coordinates grouped as g (u, conj u) pairs.
struct ComponentRep {
  int size2g = 0;
  IntegerMatrix matrix;
  int order = 0;

  /// Validates the entries, symplecticity and finite order; fills order.
  static ComponentRep from_matrix(const IntegerMatrix& m);
  static ComponentRep identity(int g);
};

/// The generator of the component group of ST(J_9), in 2x2 blocks
/// [[0,I,0,0],[0,0,0,I],[0,0,J,0],[J,0,0,0]] with J = [[0,1],[-1,0]].
ComponentRep gamma_j9();

struct MomentReport {
  std::string field;  // "identity-component", "coset k", "group"
  std::vector<Rational> moments;  // index n, from M_0
  int components = 1;
};

/// Torus used for the moments of J_m: the Hodge torus for odd m, and two
/// copies of the J_{m/2} torus for m = 2 * odd.
TorusEmbedding sato_tate_torus(int m);

LaurentPolynomial identity_trace_polynomial(const TorusEmbedding& t);

/// M_n for 0 <= n <= max_n; BOUND_EXCEEDED above max_moment_bound.
MomentReport identity_moments(const TorusEmbedding& t, int max_n);

/// tr(rep^k . U) as a Laurent polynomial in the free torus variables.
LaurentPolynomial coset_trace_polynomial(const TorusEmbedding& t, const IntegerMatrix& rep_power);

/// Throws NOT_NORMALIZING unless conjugation by rep maps the torus to itself.
void check_normalizes(const TorusEmbedding& t, const ComponentRep& rep);

/// Per-coset moments for k = 0 .. order-1.
std::vector<MomentReport> coset_moments(const TorusEmbedding& t, const ComponentRep& rep, int max_n);

/// Average of the coset moments; components = smallest k > 0 with rep^k in the torus.
MomentReport group_moments(const TorusEmbedding& t, const ComponentRep& rep, int max_n);

inline constexpr int max_moment_bound = 12;

}  // namespace fermat
