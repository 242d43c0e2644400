#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/algebra/cyclotomic.hpp"
#include "fermat/frobenius/jacobi.hpp"

namespace fermat {

/// Longest Frobenius orbit on characters for which eigenvalues are assembled.
inline constexpr unsigned max_orbit_length = 4;

/// Piece of the Weil polynomial cut out by the characters of exact order d.
struct FrobeniusFactor {
  int d = 0;
  /// Monic, leading coefficient first, degree phi(d).
  std::vector<Integer> coefficients;
  /// Decided only for p = 1 (mod m); irreducible iff the Galois orbit of the eigenvalue is full.
  std::optional<bool> irreducible;
};

struct FrobeniusData {
  int m = 0;
  std::uint64_t p = 0;
  long trace = 0;
  /// Degree 2g, leading coefficient first: x^{2g} - t x^{2g-1} + ... + p^g.
  std::optional<std::vector<Integer>> polynomial;
  /// Descending d.
  std::vector<FrobeniusFactor> factors;
};

/// Orbits of {1, ..., m-1} under a -> p a (mod m), each listed from its smallest member.
std::vector<std::vector<int>> frobenius_orbits(int m, std::uint64_t p);

/// Eigenvalue of Frobenius^f on the orbit of a: -chi2(-1) J_Q(psi_a, chi2) over F_Q, Q = p^f.
CyclotomicElement orbit_eigenvalue(const CharacterSumTable& table, int a);

/// Frobenius roots for p = 1 (mod m), index a - 1 holding the root for chi^a.
std::vector<CyclotomicElement> frobenius_roots(int m, std::uint64_t p);

/// Odd m >= 3, p prime not dividing 2m. BOUND_EXCEEDED when an orbit is longer than
/// max_orbit_length or p^f exceeds the extension bound.
FrobeniusData frobenius_polynomial(int m, std::uint64_t p, std::uint64_t bound = default_extension_bound);

/// t_{p^k} = sum over orbits O with |O| dividing k of |O| * lambda_O^{k/|O|}.
long frobenius_trace(int m, std::uint64_t p, unsigned k = 1, std::uint64_t bound = default_extension_bound);

bool satisfies_functional_equation(const FrobeniusData& data);
/// Degrees of the factors, descending d.
std::vector<int> factor_degrees(const FrobeniusData& data);

}  // namespace fermat
