#pragma once

#include <cstdint>
#include <filesystem>

#include "fermat/frobenius/sweep.hpp"
#include "fermat/st/moments.hpp"

namespace fermat {

struct AnalysisConfig {
  int m = 9;
  /// 0 skips the Frobenius stage; otherwise at least 100.
  std::uint64_t prime_bound = 0;
  int max_moment = 12;
  Rational moment_tolerance_percent = 2;
  std::filesystem::path cache_path;
  Selector selector = Selector::All;
  SweepOptions sweep;

  /// INVALID_CONFIG on any violated invariant.
  void validate() const;
};

/// $FERMAT_CACHE_DIR, else $XDG_CACHE_HOME/fermat, else $HOME/.cache/fermat, else ./.fermat-cache.
std::filesystem::path default_cache_dir();

}  // namespace fermat
