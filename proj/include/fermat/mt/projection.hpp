#pragma once

#include <string>
#include <vector>

#include "fermat/algebra/integer_matrix.hpp"
#include "fermat/cm/decomposition.hpp"

namespace fermat {

/// Matrix of N_1*phi_1* + ... + N_n*phi_n*: rows are the units of Z/mZ in
/// ascending order, one column block per ledger factor, columns within a block
/// indexed by ascending units of the factor's CM modulus.
struct ProjectionMatrix {
  int m = 0;
  DecompositionLedger ledger;
  std::vector<IntegerMatrix> blocks;
  std::vector<std::size_t> column_offsets;  // start of each block in M; last entry = total columns
  std::vector<std::vector<int>> block_characters;
  IntegerMatrix M;

  std::size_t block_of(const std::string& label) const { return ledger.index_of(label); }
};

enum class VerdictKind { Isomorphism, Isogeny, Neither };

struct ProjectionVerdict {
  std::vector<std::string> target;
  VerdictKind kind = VerdictKind::Neither;
  Integer degree = 1;  // isogeny degree, 1 for an isomorphism, 0 when NEITHER

  std::string describe() const;
  friend bool operator==(const ProjectionVerdict&, const ProjectionVerdict&) = default;
};

std::string to_string(VerdictKind k);

/// Single column: unit j of Z/mZ gets a 1 when j * b^{-1} mod d lies in the reflex type of Q(zeta_d).
std::vector<int> projection_column(int m, int d, int b);

ProjectionMatrix build_projection_matrix(int m, const DecompositionLedger& ledger);
ProjectionMatrix build_projection_matrix(int m);

/// Z^n / (T_target + ker M) is isomorphic to (column lattice of M) / (column
/// lattice of the target blocks); the verdict is read off from that quotient.
ProjectionVerdict classify_projection(const ProjectionMatrix& p, const std::vector<std::string>& target);

/// Same verdict computed literally from integer_kernel(M) and the coordinate sublattice.
ProjectionVerdict classify_projection_via_kernel(const ProjectionMatrix& p, const std::vector<std::string>& target);

std::size_t mt_rank(const ProjectionMatrix& p);

}  // namespace fermat
