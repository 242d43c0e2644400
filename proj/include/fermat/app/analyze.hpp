#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermat/app/config.hpp"
#include "fermat/app/report.hpp"
#include "fermat/error.hpp"

namespace fermat {

struct ConsistencyCheck {
  std::string name;
  Module module = Module::Cli;
  bool passed = false;
  std::string detail;
};

/// Observed numerical moment against the exact model moment.
struct MomentComparison {
  int n = 0;
  long double observed = 0;
  Rational model;
  /// Relative for even n; for odd n, |observed| as a percentage of the model's M_{n+1}.
  long double deviation_percent = 0;
  bool within_tolerance = false;
};

struct DegeneracyReport {
  static constexpr int format_version = 1;

  AnalysisConfig config;
  DecompositionLedger ledger;
  /// Odd part of m; the Hodge data below are for J_{odd part}.
  int odd_part = 0;
  std::size_t mt_rank = 0;
  std::vector<ProjectionVerdict> verdicts;
  std::vector<CensusRow> census;
  std::vector<HodgeMonomial> exceptional_codim2;
  TorusEmbedding torus;
  bool fixed_monomials_match = false;
  TorusEmbedding st_torus;
  MomentReport identity;
  std::optional<MomentReport> group;
  std::optional<NumericalMoments> numerical;
  std::string numerical_model;
  std::vector<MomentComparison> comparisons;
  std::optional<SplitDensity> split;
  std::vector<ConsistencyCheck> checks;

  bool consistent() const;
};

/// Split density inside analyze stops here (or at the prime bound, if lower).
inline constexpr std::uint64_t analyze_split_density_bound = 100'000;

/// Every factor subset of size one or two in ledger order, then the full set when it is larger.
std::vector<std::vector<std::string>> default_verdict_targets(const DecompositionLedger& ledger);

DegeneracyReport analyze(const AnalysisConfig& config);

Json to_json(const DegeneracyReport& report);
std::string to_table(const DegeneracyReport& report);

/// 0 when every check passed, otherwise the failure code of the first failing module.
int exit_code(const DegeneracyReport& report);
/// 10 + module index for failed checks, 20 + module index for module errors.
int failure_exit_code(Module module);
int error_exit_code(Module module);

}  // namespace fermat
