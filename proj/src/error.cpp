#include "fermat/error.hpp"

namespace fermat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSublattice: return "NOT_SUBLATTICE";
    case ErrorCode::AmbientMismatch: return "AMBIENT_MISMATCH";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::InvalidModulus: return "INVALID_MODULUS";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::LedgerMismatch: return "LEDGER_MISMATCH";
    case ErrorCode::CodimOutOfRange: return "CODIM_OUT_OF_RANGE";
    case ErrorCode::NotNormalizing: return "NOT_NORMALIZING";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::CongruenceViolation: return "CONGRUENCE_VIOLATION";
    case ErrorCode::NotSplit: return "NOT_SPLIT";
    case ErrorCode::FormatMismatch: return "FORMAT_MISMATCH";
    case ErrorCode::ConflictingEntry: return "CONFLICTING_ENTRY";
    case ErrorCode::InvalidConfig: return "INVALID_CONFIG";
    case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Module module_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSublattice:
    case ErrorCode::AmbientMismatch:
    case ErrorCode::DivisionByZero:
    case ErrorCode::DimensionMismatch:
      return Module::Algebra;
    case ErrorCode::InvalidModulus:
    case ErrorCode::Unsupported:
      return Module::Cm;
    case ErrorCode::LedgerMismatch:
      return Module::Mt;
    case ErrorCode::CodimOutOfRange:
      return Module::Hodge;
    case ErrorCode::NotNormalizing:
      return Module::SatoTate;
    case ErrorCode::BoundExceeded:
    case ErrorCode::CongruenceViolation:
    case ErrorCode::NotSplit:
      return Module::Frobenius;
    case ErrorCode::FormatMismatch:
    case ErrorCode::ConflictingEntry:
    case ErrorCode::InvalidConfig:
    case ErrorCode::Io:
      return Module::Cli;
  }
  return Module::Cli;
}

std::string_view to_string(Module module) {
  switch (module) {
    case Module::Algebra: return "exact-algebra";
    case Module::Cm: return "cm-structure";
    case Module::Mt: return "mt-projection";
    case Module::Hodge: return "hodge-analysis";
    case Module::SatoTate: return "sato-tate-moments";
    case Module::Frobenius: return "frobenius-arithmetic";
    case Module::Cli: return "cli-and-cache";
  }
  return "unknown";
}

}  // namespace fermat
