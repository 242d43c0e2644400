#pragma once

#include <cstdint>
#include <vector>

namespace fermat {

/// F_q = F_p[x]/(f) with q = p^k, f the first monic irreducible of degree k in index order.
/// Elements are coefficient vectors of length k, constant term first. Needs p < 2^31.
class FiniteField {
 public:
  using Element = std::vector<std::uint64_t>;

  FiniteField(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Monic modulus, constant term first (length k + 1).
  const Element& modulus() const noexcept { return f_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const;
  Element constant(std::uint64_t c) const;
  /// Element whose base-p digits are the coefficients; index(from_index(i)) == i.
  Element from_index(std::uint64_t i) const;
  std::uint64_t index(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_zero(const Element& a) const;

  /// Generator of the multiplicative group, smallest in index order.
  Element primitive_element() const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  Element f_;
};

/// Rabin's test over F_p; poly is monic, constant term first.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p);

/// Table over indices of F_q: 1 for nonzero squares, -1 for non-squares, 0 at zero.
std::vector<std::int8_t> quadratic_character_table(const FiniteField& field);

}  // namespace fermat
