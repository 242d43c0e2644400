#include "fermat/frobenius/point_count.hpp"

#include <numeric>

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"
#include "fermat/frobenius/finite_field.hpp"

namespace fermat {

long point_count_trace(int m, std::uint64_t q, std::uint64_t bound) {
  if (m < 2) throw Error(ErrorCode::InvalidModulus, "m must be at least 2");
  const auto [p, k] = arith::prime_power(q);
  if (p == 0 || p == 2) throw Error(ErrorCode::InvalidModulus, "q must be an odd prime power");
  if (std::gcd(p, static_cast<std::uint64_t>(m)) != 1) throw Error(ErrorCode::InvalidModulus, "q must be coprime to m");
  if (q > bound) throw Error(ErrorCode::BoundExceeded, "q = " + std::to_string(q) + " exceeds the brute-force bound");

  const FiniteField field(p, static_cast<unsigned>(k));
  const auto chi = quadratic_character_table(field);
  const auto minus_one = field.constant(p - 1);
  long sum = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    auto y = field.add(field.pow(field.from_index(i), static_cast<std::uint64_t>(m)), minus_one);
    sum += chi[field.index(y)];
  }
  return -sum;
}

}  // namespace fermat
