#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fermat/algebra/cyclotomic.hpp"
#include "fermat/algebra/integer_matrix.hpp"

namespace fermat {

struct SplitTestResult {
  int m = 0;
  std::uint64_t p = 0;
  bool torsion_free = true;
  /// Rank of the saturated relation lattice (kernel of the valuation matrix).
  int relation_rank = 0;
  /// First kernel basis vector whose product is a root of unity other than 1.
  std::optional<std::vector<long>> witness;
  /// The witness product as {sign, k}: sign * zeta_m^k.
  std::optional<std::pair<int, long>> witness_root;
};

/// Product of gens[i]^{e[i]} for generators with g * conj(g) = p, computed as
/// N * conj(D) / p^s where N, D collect the positive and negative exponents and s = deg D.
CyclotomicElement evaluate_relation(const std::vector<CyclotomicElement>& gens, std::span<const long> e,
                                    std::uint64_t p);

/// Generators: the 2g Frobenius roots at p = 1 (mod m). NOT_SPLIT otherwise.
SplitTestResult torsion_free_test(int m, std::uint64_t p);

}  // namespace fermat
