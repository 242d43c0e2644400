#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fermat {

enum class ErrorCode {
  // exact-algebra
  NotSublattice,
  AmbientMismatch,
  DivisionByZero,
  DimensionMismatch,
  // cm-structure
  InvalidModulus,
  Unsupported,
  // mt-projection
  LedgerMismatch,
  // hodge-analysis
  CodimOutOfRange,
  // sato-tate-moments
  NotNormalizing,
  // frobenius-arithmetic
  BoundExceeded,
  CongruenceViolation,
  NotSplit,
  // cli-and-cache
  FormatMismatch,
  ConflictingEntry,
  InvalidConfig,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Module tag used for diagnostics and for the CLI exit-code contract.
enum class Module { Algebra, Cm, Mt, Hodge, SatoTate, Frobenius, Cli };

Module module_of(ErrorCode code);
std::string_view to_string(Module module);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  Module module() const noexcept { return module_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace fermat
