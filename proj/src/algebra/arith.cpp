#include "fermat/algebra/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace fermat::arith {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, r = mod(a, m), y = 1;
  while (r != 0) {
    std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  if (g != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod(x, m);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::pair<std::uint64_t, int> prime_power(std::uint64_t n) {
  auto factors = prime_factors(n);
  if (factors.size() != 1) return {0, 0};
  int k = 0;
  while (n > 1) {
    n /= factors[0];
    ++k;
  }
  return {factors[0], k};
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi <= 2 || lo >= hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> seg;
  for (std::uint64_t start = lo; start < hi; start += kSegment) {
    std::uint64_t end = std::min(hi, start + kSegment);
    seg.assign(end - start, 1);
    for (std::uint64_t p : base) {
      if (p * p >= end) break;
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t j = first; j < end; j += p) seg[j - start] = 0;
    }
    for (std::uint64_t i = start; i < end; ++i) {
      if (seg[i - start]) out.push_back(i);
    }
  }
  return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::invalid_argument("smallest_primitive_root: p is not prime");
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  std::int64_t x = mod(a, n), k = 1;
  while (x != 1) {
    x = x * mod(a, n) % n;
    ++k;
  }
  return k;
}

std::vector<std::int64_t> units(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t j = 1; j < n; ++j) {
    if (std::gcd(j, n) == 1) out.push_back(j);
  }
  if (n == 1) out.push_back(0);
  return out;
}

}  // namespace fermat::arith
