#pragma once

#include <cstdint>
#include <vector>

#include "fermat/algebra/integer_matrix.hpp"
#include "fermat/frobenius/jacobi.hpp"

namespace fermat {

/// The prime (p, zeta_m - w) of Z[zeta_m], p = 1 (mod m).
struct PrimeAboveP {
  long t = 0;
  std::uint64_t w = 0;
};

/// One prime per unit t mod m, ascending t, with w = w_1^t and w_1 = g^{(p-1)/m}
/// for g the smallest primitive root; chi(x) = x^{(p-1)/m} modulo the t = 1 prime.
std::vector<PrimeAboveP> primes_above(int m, std::uint64_t p);

/// Z-basis (HNF) of P^k in the power basis of Z[zeta_m], P = (p, zeta - w).
IntegerMatrix ideal_power_basis(int m, std::uint64_t p, std::uint64_t w, int k);

/// Largest k <= cap with x in P^k; x must be a nonzero algebraic integer.
int ideal_valuation(const CyclotomicElement& x, std::uint64_t p, std::uint64_t w, int cap = 64);

/// Row t (ascending units), column j: valuation of sums[j] at the prime labelled t.
/// NOT_SPLIT unless p = 1 (mod m).
IntegerMatrix stickelberger_valuations(const std::vector<JacobiSum>& sums);

}  // namespace fermat
