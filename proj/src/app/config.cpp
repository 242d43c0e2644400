#include "fermat/app/config.hpp"

#include <cstdlib>

#include "fermat/error.hpp"

namespace fermat {

void AnalysisConfig::validate() const {
  if (m < 3) throw Error(ErrorCode::InvalidConfig, "m must be at least 3");
  if (prime_bound != 0 && prime_bound < 100) throw Error(ErrorCode::InvalidConfig, "prime bound must be at least 100");
  if (prime_bound > max_sweep_bound) throw Error(ErrorCode::InvalidConfig, "prime bound exceeds the sweep ceiling");
  if (max_moment < 0 || max_moment > max_moment_bound) throw Error(ErrorCode::InvalidConfig, "max moment must lie in [0, 12]");
  if (sgn(moment_tolerance_percent) <= 0) throw Error(ErrorCode::InvalidConfig, "tolerance must be positive");
  if (sweep.range_size == 0) throw Error(ErrorCode::InvalidConfig, "range size must be positive");
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("FERMAT_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "fermat";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "fermat";
  return ".fermat-cache";
}

}  // namespace fermat
