#pragma once

#include <string>
#include <vector>

namespace fermat {

struct LedgerFactor {
  std::string label;  // "J3", "X", "X1", ...
  int dimension = 0;
  int cm_modulus = 0;
  friend bool operator==(const LedgerFactor&, const LedgerFactor&) = default;
};

/// Isogeny decomposition of J_m into simple CM factors, one per divisor d > 1
/// of the odd part of m.
struct DecompositionLedger {
  int m = 0;
  int multiplicity = 1;  // 2 for m = 2m' with m' odd
  std::vector<LedgerFactor> factors;  // descending CM modulus

  int genus() const;
  /// Index of the factor with this label; LEDGER_MISMATCH if absent.
  std::size_t index_of(const std::string& label) const;
};

/// Genus of y^2 = x^m - 1.
int curve_genus(int m);

DecompositionLedger decompose_jacobian(int m);

}  // namespace fermat
