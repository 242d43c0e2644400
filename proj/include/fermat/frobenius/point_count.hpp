#pragma once

#include <cstdint>

namespace fermat {

inline constexpr std::uint64_t default_brute_force_bound = 1'000'000;

/// t_q = -sum over x in F_q of chi2(x^m - 1), by enumeration of F_q.
/// For odd m this is q + 1 - #C_m(F_q) with one point at infinity.
/// q must be an odd prime power coprime to m; BOUND_EXCEEDED above the bound.
long point_count_trace(int m, std::uint64_t q, std::uint64_t bound = default_brute_force_bound);

}  // namespace fermat
