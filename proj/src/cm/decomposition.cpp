#include "fermat/cm/decomposition.hpp"

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {

int curve_genus(int m) { return m % 2 == 1 ? (m - 1) / 2 : (m - 2) / 2; }

int DecompositionLedger::genus() const {
  int g = 0;
  for (const auto& f : factors) g += f.dimension;
  return g * multiplicity;
}

std::size_t DecompositionLedger::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].label == label) return i;
  throw Error(ErrorCode::LedgerMismatch, "no factor labelled " + label + " for m=" + std::to_string(m));
}

DecompositionLedger decompose_jacobian(int m) {
  if (m < 3) throw Error(ErrorCode::InvalidModulus, "m must be >= 3");
  if (m % 4 == 0) throw Error(ErrorCode::Unsupported, "no decomposition available for m divisible by 4");
  DecompositionLedger ledger;
  ledger.m = m;
  int odd = m;
  if (m % 2 == 0) {
    odd = m / 2;
    ledger.multiplicity = 2;
    if (odd < 3) throw Error(ErrorCode::InvalidModulus, "m = 2 has genus 0");
  }
  std::vector<int> composite;
  for (auto d : arith::divisors(odd))
    if (d > 1 && !arith::is_prime(static_cast<std::uint64_t>(d))) composite.push_back(static_cast<int>(d));
  const auto ds = arith::divisors(odd);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    const int d = static_cast<int>(*it);
    if (d == 1) continue;
    std::string label;
    if (arith::is_prime(static_cast<std::uint64_t>(d))) {
      label = "J" + std::to_string(d);
    } else if (composite.size() == 1) {
      label = "X";
    } else {
      std::size_t k = 0;
      while (composite[k] != d) ++k;
      label = "X" + std::to_string(k + 1);
    }
    ledger.factors.push_back({label, static_cast<int>(arith::euler_phi(d) / 2), d});
  }
  return ledger;
}

}  // namespace fermat
