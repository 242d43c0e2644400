#pragma once

#include <cstdint>
#include <vector>

namespace fermat {

/// (Z/mZ)^x with a fixed ascending order; the order indexes matrix rows.
class GaloisData {
 public:
  explicit GaloisData(int m);

  int modulus() const noexcept { return m_; }
  const std::vector<int>& units() const noexcept { return units_; }
  std::size_t size() const noexcept { return units_.size(); }
  /// Position of a unit in the ordering; -1 if j is not a unit.
  int index_of(long j) const;
  /// H_d = {j : j = 1 mod d}, ascending.
  std::vector<int> subgroup_for(int d) const;

 private:
  int m_;
  std::vector<int> units_;
  std::vector<int> index_;
};

}  // namespace fermat
