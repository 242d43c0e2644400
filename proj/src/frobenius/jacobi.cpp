#include "fermat/frobenius/jacobi.hpp"

#include <numeric>

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"
#include "fermat/frobenius/finite_field.hpp"

namespace fermat {
namespace {

void check_split(int m, std::uint64_t p) {
  if (m < 2) throw Error(ErrorCode::InvalidModulus, "m must be at least 2");
  if (p < 3 || !arith::is_prime(p)) throw Error(ErrorCode::InvalidModulus, "p must be an odd prime");
  if ((p - 1) % static_cast<std::uint64_t>(m) != 0)
    throw Error(ErrorCode::CongruenceViolation, "p = " + std::to_string(p) + " is not 1 mod " + std::to_string(m));
}

}  // namespace

CharacterSumTable character_sum_table(int m, std::uint64_t p, unsigned f, std::uint64_t bound) {
  if (m < 2) throw Error(ErrorCode::InvalidModulus, "m must be at least 2");
  if (p < 3 || !arith::is_prime(p)) throw Error(ErrorCode::InvalidModulus, "p must be an odd prime");
  CharacterSumTable t;
  t.m = m;
  t.p = p;
  t.f = f;
  if (f == 1) {
    t.order = p;
    t.e = static_cast<int>(std::gcd(static_cast<std::uint64_t>(m), p - 1));
    t.c.assign(static_cast<std::size_t>(t.e), 0);
    t.chi2_minus_one = (p % 4 == 1) ? 1 : -1;
    const FiniteField field(p, 1);
    const auto chi = quadratic_character_table(field);
    const std::uint64_t g = arith::smallest_primitive_root(p);
    std::uint64_t x = 1;
    int k = 0;
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      t.c[static_cast<std::size_t>(k)] += chi[x == 1 ? 0 : p + 1 - x];
      x = x * g % p;
      if (++k == t.e) k = 0;
    }
    return t;
  }

  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    if (q > bound / p) throw Error(ErrorCode::BoundExceeded, std::to_string(p) + "^" + std::to_string(f) + " exceeds the extension bound");
    q *= p;
  }
  t.order = q;
  t.e = static_cast<int>(std::gcd(static_cast<std::uint64_t>(m), q - 1));
  t.c.assign(static_cast<std::size_t>(t.e), 0);
  t.chi2_minus_one = (q % 4 == 1) ? 1 : -1;
  const FiniteField field(p, f);
  const auto chi = quadratic_character_table(field);
  const auto g = field.primitive_element();
  const auto one = field.one();
  auto x = one;
  int k = 0;
  for (std::uint64_t j = 0; j + 1 < q; ++j) {
    t.c[static_cast<std::size_t>(k)] += chi[field.index(field.sub(one, x))];
    x = field.mul(x, g);
    if (++k == t.e) k = 0;
  }
  return t;
}

CyclotomicElement jacobi_from_table(const CharacterSumTable& table, int a) {
  const int m = table.m;
  const int order = m / std::gcd(a, m);
  if (table.e % order != 0) throw Error(ErrorCode::CongruenceViolation, "character order does not divide Q - 1");
  IntVector by_power(static_cast<std::size_t>(m));
  for (int k = 0; k < table.e; ++k)
    by_power[static_cast<std::size_t>(static_cast<long>(a) * k % m)] += table.c[static_cast<std::size_t>(k)];
  return CyclotomicElement::from_powers(m, by_power);
}

JacobiSum jacobi_sum(int m, std::uint64_t p, int a) {
  check_split(m, p);
  if (a < 1 || a >= m) throw Error(ErrorCode::InvalidModulus, "character index must lie in [1, m-1]");
  const auto table = character_sum_table(m, p);
  return {m, p, a, jacobi_from_table(table, a)};
}

std::vector<JacobiSum> jacobi_sums(int m, std::uint64_t p) {
  check_split(m, p);
  const auto table = character_sum_table(m, p);
  std::vector<JacobiSum> out;
  out.reserve(static_cast<std::size_t>(m - 1));
  for (int a = 1; a < m; ++a) out.push_back({m, p, a, jacobi_from_table(table, a)});
  return out;
}

}  // namespace fermat
