#pragma once

// Machine-word number theory helpers shared by every module.

#include <cstdint>
#include <vector>

namespace fermat::arith {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; a must be a unit.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Representative of a in [0, m).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// If n = p^k for a prime p and k >= 1, returns {p, k}; otherwise {0, 0}.
std::pair<std::uint64_t, int> prime_power(std::uint64_t n);

/// Primes in [lo, hi), ascending (segmented sieve).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Smallest generator of (Z/pZ)^x.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Order of a in (Z/nZ)^x; a must be a unit.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t n);

/// Units of Z/nZ in ascending order.
std::vector<std::int64_t> units(std::int64_t n);

}  // namespace fermat::arith
