#include "fermat/cm/galois.hpp"

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {

GaloisData::GaloisData(int m) : m_(m) {
  if (m < 1) throw Error(ErrorCode::InvalidModulus, "modulus must be positive");
  index_.assign(static_cast<std::size_t>(m), -1);
  for (auto u : arith::units(m)) {
    index_[static_cast<std::size_t>(u)] = static_cast<int>(units_.size());
    units_.push_back(static_cast<int>(u));
  }
}

int GaloisData::index_of(long j) const { return index_[static_cast<std::size_t>(arith::mod(j, m_))]; }

std::vector<int> GaloisData::subgroup_for(int d) const {
  if (d < 1 || m_ % d != 0) throw Error(ErrorCode::LedgerMismatch, "subgroup requested for a non-divisor");
  std::vector<int> out;
  for (int u : units_)
    if (u % d == 1 % d) out.push_back(u);
  return out;
}

}  // namespace fermat
