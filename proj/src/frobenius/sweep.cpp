#include "fermat/frobenius/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {
namespace {

void check_sweep(int m, std::uint64_t bound) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidModulus, "sweeps need odd m >= 3");
  if (bound > max_sweep_bound) throw Error(ErrorCode::BoundExceeded, "bound " + std::to_string(bound) + " exceeds the sweep ceiling");
}

bool is_good(int m, std::uint64_t p) { return p > 2 && p % static_cast<std::uint64_t>(m) != 0 && std::gcd(p, static_cast<std::uint64_t>(m)) == 1; }

// Runs job(i) for i in [0, n) on a pool; every index is handled exactly once.
void run_indexed(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges(std::uint64_t lo, std::uint64_t hi, std::uint64_t width) {
  if (width == 0) throw Error(ErrorCode::InvalidConfig, "range size must be positive");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = lo; a < hi; a += std::min(width, hi - a)) out.emplace_back(a, std::min(hi, a + width));
  return out;
}

}  // namespace

std::string_view to_string(Selector s) {
  switch (s) {
    case Selector::All: return "all";
    case Selector::Congruent1ModM: return "congruent";
    case Selector::TorsionFree: return "torsion-free";
  }
  return "?";
}

std::optional<Selector> parse_selector(std::string_view s) {
  for (auto sel : {Selector::All, Selector::Congruent1ModM, Selector::TorsionFree})
    if (s == to_string(sel)) return sel;
  return std::nullopt;
}

long TraceKernel::operator()(int m, std::uint64_t p) {
  const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(m), p - 1);
  if (d == 1) return 0;  // x -> x^m permutes F_p
  const int chi_minus_one = (p % 4 == 1) ? 1 : -1;

  chi_.assign(p, -1);
  chi_[0] = 0;
  std::uint64_t sq = 0;
  for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) {
    sq += 2 * x - 1;
    if (sq >= p) sq -= p;
    chi_[sq] = 1;
  }

  const std::uint64_t h = arith::powmod(arith::smallest_primitive_root(p), d, p);
  const double inv = 1.0 / static_cast<double>(p);
  const std::uint64_t n = (p - 1) / d;
  long s = 0;
  std::uint64_t y = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    s += chi_[y - 1];
    // y * h mod p with a floating quotient estimate; p < 2^31
    const std::uint64_t prod = y * h;
    const auto q = static_cast<std::uint64_t>(static_cast<double>(prod) * inv);
    auto r = static_cast<std::int64_t>(prod - q * p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    else if (r >= static_cast<std::int64_t>(p)) r -= static_cast<std::int64_t>(p);
    y = static_cast<std::uint64_t>(r);
  }
  return -chi_minus_one - static_cast<long>(d) * s;
}

long fast_trace(int m, std::uint64_t p) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidModulus, "fast traces need odd m >= 3");
  if (!is_good(m, p) || !arith::is_prime(p)) throw Error(ErrorCode::InvalidModulus, "p must be a good prime");
  if (p >= (1ULL << 31)) throw Error(ErrorCode::BoundExceeded, "p too large for the trace kernel");
  TraceKernel k;
  return k(m, p);
}

std::vector<TraceEntry> sweep_traces(int m, std::uint64_t lo, std::uint64_t hi, const SweepOptions& options,
                                     std::span<const TraceEntry> known) {
  check_sweep(m, hi);
  const auto parts = ranges(lo, hi, options.range_size);
  std::vector<std::vector<TraceEntry>> results(parts.size());
  run_indexed(parts.size(), options.threads, [&](std::size_t i) {
    TraceKernel kernel;
    auto hint = std::lower_bound(known.begin(), known.end(), parts[i].first,
                                 [](const TraceEntry& e, std::uint64_t p) { return e.p < p; });
    for (auto p : arith::primes_in_range(parts[i].first, parts[i].second)) {
      if (!is_good(m, p)) continue;
      while (hint != known.end() && hint->p < p) ++hint;
      if (hint != known.end() && hint->p == p) results[i].push_back(*hint);
      else results[i].push_back({p, kernel(m, p)});
    }
  });
  std::vector<TraceEntry> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

NumericalMoments numerical_moments(int m, std::uint64_t bound, Selector selector, const std::vector<TraceEntry>& traces,
                                   int max_n, const SweepOptions& options) {
  check_sweep(m, bound);
  if (max_n < 0 || max_n > max_numerical_moment) throw Error(ErrorCode::BoundExceeded, "moment order above 12");
  const auto parts = ranges(0, bound, options.range_size);

  struct Partial {
    std::uint64_t count = 0;
    std::vector<Integer> power_sums;
    std::vector<long double> normalized;
  };
  const auto n_terms = static_cast<std::size_t>(max_n) + 1;
  std::vector<Partial> partial(parts.size());
  // slice boundaries of the (sorted) trace list per range
  std::vector<std::size_t> begin(parts.size() + 1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    begin[i] = static_cast<std::size_t>(std::lower_bound(traces.begin(), traces.end(), parts[i].first,
                                                         [](const TraceEntry& e, std::uint64_t p) { return e.p < p; }) -
                                        traces.begin());
  begin[parts.size()] = static_cast<std::size_t>(std::lower_bound(traces.begin(), traces.end(), bound,
                                                                  [](const TraceEntry& e, std::uint64_t p) { return e.p < p; }) -
                                                 traces.begin());

  run_indexed(parts.size(), options.threads, [&](std::size_t i) {
    Partial& part = partial[i];
    part.power_sums.assign(n_terms, 0);
    part.normalized.assign(n_terms, 0.0L);
    for (std::size_t j = begin[i]; j < begin[i + 1]; ++j) {
      const auto [p, t] = traces[j];
      if (!is_good(m, p)) continue;
      const bool split = (p - 1) % static_cast<std::uint64_t>(m) == 0;
      if (selector != Selector::All && !split) continue;
      if (selector == Selector::TorsionFree && !torsion_free_test(m, p).torsion_free) continue;
      ++part.count;
      const long double a = static_cast<long double>(t) / std::sqrt(static_cast<long double>(p));
      long double an = 1.0L;
      Integer tn = 1;
      for (std::size_t n = 0; n < n_terms; ++n) {
        part.normalized[n] += an;
        part.power_sums[n] += tn;
        an *= a;
        tn *= t;
      }
    }
  });

  // the trace list must cover the good primes below the bound
  const auto primes = arith::primes_in_range(3, bound);
  std::size_t expected = 0;
  for (auto p : primes)
    if (is_good(m, p)) ++expected;
  if (begin[parts.size()] - begin[0] != expected) throw Error(ErrorCode::BoundExceeded, "trace list does not cover every good prime below the bound");

  NumericalMoments out;
  out.m = m;
  out.bound = bound;
  out.selector = selector;
  out.range_size = options.range_size;
  out.power_sums.assign(n_terms, 0);
  std::vector<long double> sums(n_terms, 0.0L);
  for (const auto& part : partial) {
    out.primes += part.count;
    for (std::size_t n = 0; n < n_terms; ++n) {
      sums[n] += part.normalized[n];
      out.power_sums[n] += part.power_sums[n];
    }
  }
  out.moments.assign(n_terms, 0.0L);
  if (out.primes > 0)
    for (std::size_t n = 0; n < n_terms; ++n) out.moments[n] = sums[n] / static_cast<long double>(out.primes);
  return out;
}

NumericalMoments numerical_moments(int m, std::uint64_t bound, Selector selector, int max_n, const SweepOptions& options) {
  check_sweep(m, bound);
  const auto traces = sweep_traces(m, 0, bound, options);
  return numerical_moments(m, bound, selector, traces, max_n, options);
}

std::uint64_t SplitDensity::torsion_free() const {
  return static_cast<std::uint64_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.torsion_free; }));
}

double SplitDensity::fraction() const {
  return results.empty() ? 0.0 : static_cast<double>(torsion_free()) / static_cast<double>(results.size());
}

SplitDensity split_density(int m, std::uint64_t bound, const SweepOptions& options) {
  check_sweep(m, bound);
  const auto parts = ranges(0, bound, options.range_size);
  std::vector<std::vector<SplitTestResult>> partial(parts.size());
  run_indexed(parts.size(), options.threads, [&](std::size_t i) {
    for (auto p : arith::primes_in_range(parts[i].first, parts[i].second))
      if (p > 2 && (p - 1) % static_cast<std::uint64_t>(m) == 0) partial[i].push_back(torsion_free_test(m, p));
  });
  SplitDensity out;
  out.m = m;
  out.bound = bound;
  for (auto& r : partial) out.results.insert(out.results.end(), r.begin(), r.end());
  return out;
}

}  // namespace fermat
