#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fermat/algebra/integer_matrix.hpp"
#include "fermat/frobenius/torsion.hpp"

namespace fermat {

/// Which good primes enter a numerical moment.
/// TorsionFree keeps p = 1 (mod m) whose Frobenius root group is torsion-free; it stands in
/// for primes split completely in the connectedness field.
enum class Selector { All, Congruent1ModM, TorsionFree };

std::string_view to_string(Selector s);
std::optional<Selector> parse_selector(std::string_view s);

inline constexpr std::uint64_t max_sweep_bound = 1ULL << 26;
inline constexpr int max_numerical_moment = 12;

struct TraceEntry {
  std::uint64_t p = 0;
  long t = 0;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct SweepOptions {
  /// Width of the prime ranges; results depend on it only through float rounding.
  std::uint64_t range_size = 1ULL << 16;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// t_p for odd m and a good prime p, from
///   t_p = -chi2(-1) - d * sum over y in H of chi2(y - 1),
/// d = gcd(m, p - 1), H the subgroup of d-th powers. Reuses its residue table across calls.
class TraceKernel {
 public:
  long operator()(int m, std::uint64_t p);

 private:
  std::vector<std::int8_t> chi_;
};

long fast_trace(int m, std::uint64_t p);

/// Traces of the good primes in [lo, hi), ascending. Odd m only.
/// Primes present in `known` (ascending p) are copied instead of recomputed.
std::vector<TraceEntry> sweep_traces(int m, std::uint64_t lo, std::uint64_t hi, const SweepOptions& options = {},
                                     std::span<const TraceEntry> known = {});

struct NumericalMoments {
  int m = 0;
  std::uint64_t bound = 0;
  Selector selector = Selector::All;
  std::uint64_t range_size = 0;
  std::uint64_t primes = 0;
  /// Index n: (1/N) sum (t_p / sqrt p)^n.
  std::vector<long double> moments;
  /// Index n: sum t_p^n, exact.
  std::vector<Integer> power_sums;
};

/// Moments over selected good primes p < bound. `traces` must hold every good prime below
/// the bound (e.g. a sweep or a cache); BOUND_EXCEEDED above max_sweep_bound or for n > 12.
NumericalMoments numerical_moments(int m, std::uint64_t bound, Selector selector, const std::vector<TraceEntry>& traces,
                                   int max_n = max_numerical_moment, const SweepOptions& options = {});
NumericalMoments numerical_moments(int m, std::uint64_t bound, Selector selector, int max_n = max_numerical_moment,
                                   const SweepOptions& options = {});

struct SplitDensity {
  int m = 0;
  std::uint64_t bound = 0;
  std::vector<SplitTestResult> results;
  std::uint64_t torsion_free() const;
  double fraction() const;
};

/// torsion_free_test over all p = 1 (mod m) below the bound.
SplitDensity split_density(int m, std::uint64_t bound, const SweepOptions& options = {});

}  // namespace fermat
