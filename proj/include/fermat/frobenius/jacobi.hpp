#pragma once

#include <cstdint>
#include <vector>

#include "fermat/algebra/cyclotomic.hpp"

namespace fermat {

/// Largest field order for which character sums over F_{p^f}, f > 1, are enumerated.
inline constexpr std::uint64_t default_extension_bound = 10'000'000;

/// J(chi^a, chi2) over F_p lifted to Z[zeta_m].
/// Convention: chi(g^k) = zeta_m^k with g the smallest primitive root mod p.
struct JacobiSum {
  int m = 0;
  std::uint64_t p = 0;
  int a = 0;
  CyclotomicElement value;
};

/// Character-sum data over F_Q, Q = p^f, with G the primitive element of F_Q:
/// c[k] = sum over 0 <= j < Q-1, j = k (mod e) of chi2(1 - G^j), where e = gcd(m, Q-1).
/// For f = 1, G is the smallest primitive root mod p.
struct CharacterSumTable {
  int m = 0;
  std::uint64_t p = 0;
  unsigned f = 1;
  std::uint64_t order = 0;
  int e = 0;
  std::vector<long> c;
  int chi2_minus_one = 0;
};

CharacterSumTable character_sum_table(int m, std::uint64_t p, unsigned f = 1,
                                      std::uint64_t bound = default_extension_bound);

/// J_Q(psi_a, chi2) with psi_a(G^j) = zeta_m^{a j}; psi_a must be defined on F_Q^x,
/// i.e. m / gcd(a, m) divides e.
CyclotomicElement jacobi_from_table(const CharacterSumTable& table, int a);

/// CONGRUENCE_VIOLATION unless p = 1 (mod m); a in [1, m-1].
JacobiSum jacobi_sum(int m, std::uint64_t p, int a);
/// All a = 1..m-1 from one pass over F_p.
std::vector<JacobiSum> jacobi_sums(int m, std::uint64_t p);

}  // namespace fermat
