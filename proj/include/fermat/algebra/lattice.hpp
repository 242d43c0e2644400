#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fermat/algebra/integer_matrix.hpp"

namespace fermat {

/// Sublattice of Z^n stored by its canonical HNF basis, so equality is
/// entry-wise comparison.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank = 0);
  /// Lattice spanned by the rows of generators.
  static Lattice from_generators(const IntegerMatrix& generators);
  static Lattice standard(std::size_t n);
  /// Coordinate sublattice spanned by e_i for i in coords.
  static Lattice coordinate(std::size_t n, std::span<const std::size_t> coords);

  std::size_t ambient_rank() const noexcept { return n_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntegerMatrix& basis() const noexcept { return basis_; }

  bool contains(std::span<const Integer> v) const;
  bool contains(const Lattice& other) const;
  bool is_saturated() const;

  friend bool operator==(const Lattice& a, const Lattice& b) = default;

 private:
  std::size_t n_;
  IntegerMatrix basis_;
};

/// Saturated right kernel {v : M v = 0}.
Lattice integer_kernel(const IntegerMatrix& m);

/// [ambient : sub], or nullopt when sub has smaller rank (infinite index).
/// Throws NOT_SUBLATTICE if sub is not contained in ambient.
std::optional<Integer> sublattice_index(const Lattice& sub, const Lattice& ambient);

Lattice lattice_sum(const Lattice& a, const Lattice& b);

/// (Q-span of L) intersected with Z^n.
Lattice saturate(const Lattice& l);

}  // namespace fermat
