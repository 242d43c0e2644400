#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "fermat/frobenius/sweep.hpp"

namespace fermat {

/// On disk: "#fermat-trace-cache v1 m=<m>" then "<p> <t_p>" lines sorted by p.
struct TraceCache {
  int m = 0;
  std::vector<TraceEntry> entries;  // strictly ascending p

  std::optional<long> lookup(std::uint64_t p) const;
  friend bool operator==(const TraceCache&, const TraceCache&) = default;
};

inline constexpr const char* trace_cache_magic = "#fermat-trace-cache";
inline constexpr int trace_cache_version = 1;

/// FORMAT_MISMATCH on a bad header, malformed or unsorted lines; IO_ERROR if unreadable.
TraceCache read_trace_cache(const std::filesystem::path& path);
/// Writes through a temporary file and a rename.
void write_trace_cache(const std::filesystem::path& path, const TraceCache& cache);

/// Sorted union. FORMAT_MISMATCH if the moduli differ; CONFLICTING_ENTRY naming p when
/// two caches disagree on t_p.
TraceCache merge_trace_caches(const std::vector<TraceCache>& caches);

std::filesystem::path cache_file(const std::filesystem::path& dir, int m);

/// Traces of every good prime below the bound; primes already in the cache file under
/// `dir` are taken from it, the rest are computed and the file is rewritten.
struct CachedSweep {
  std::vector<TraceEntry> traces;
  std::size_t reused = 0;
  std::size_t computed = 0;
};
CachedSweep cached_sweep(int m, std::uint64_t bound, const std::filesystem::path& dir, const SweepOptions& options = {});

}  // namespace fermat
