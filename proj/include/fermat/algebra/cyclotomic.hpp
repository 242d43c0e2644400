#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fermat/algebra/integer_matrix.hpp"

namespace fermat {

/// Reduction data for Q(zeta_m) = Q[x] / Phi_m(x).
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int m);

  int modulus() const noexcept { return m_; }
  int degree() const noexcept { return phi_; }
  /// Coefficients of Phi_m, constant term first.
  const IntVector& polynomial() const noexcept { return poly_; }
  /// x^k mod Phi_m for 0 <= k < m.
  const IntVector& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

  explicit CyclotomicField(int m);

 private:
  int m_;
  int phi_;
  IntVector poly_;
  std::vector<IntVector> powers_;
};

IntVector cyclotomic_polynomial(int m);

/// Exact element (c_0 + c_1 z + ... ) / den of Q(zeta_m), den > 0 and coprime to the content.
class CyclotomicElement {
 public:
  CyclotomicElement() = default;
  CyclotomicElement(int m, IntVector coeffs, Integer den = 1);

  static CyclotomicElement zero(int m);
  static CyclotomicElement integer(int m, const Integer& c);
  /// zeta_m^k for any integer k.
  static CyclotomicElement zeta(int m, long k);
  /// Sum of c_k zeta^k with k taken mod m (coefficients indexed by powers of zeta).
  static CyclotomicElement from_powers(int m, const IntVector& by_power);

  int modulus() const noexcept { return field_ ? field_->modulus() : 0; }
  const IntVector& coeffs() const noexcept { return coeffs_; }
  const Integer& denominator() const noexcept { return den_; }
  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }

  CyclotomicElement operator-() const;
  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

  /// Image under zeta -> zeta^k, gcd(k, m) = 1.
  CyclotomicElement galois(long k) const;
  CyclotomicElement conjugate() const { return galois(-1); }
  /// Field norm down to Q, as a reduced fraction num/den.
  std::pair<Integer, Integer> norm() const;
  /// Throws DIVISION_BY_ZERO for zero.
  CyclotomicElement inverse() const;
  CyclotomicElement pow(long e) const;

  /// If this equals sign * zeta^k, returns {sign, k} with k in [0, m);
  /// a positive sign is preferred when both forms exist (even m).
  std::optional<std::pair<int, long>> as_root_of_unity() const;
  bool is_one() const;

  std::string to_string() const;

 private:
  void normalize();

  std::shared_ptr<const CyclotomicField> field_;
  IntVector coeffs_;
  Integer den_ = 1;
};

CyclotomicElement cyclotomic_mul(const CyclotomicElement& a, const CyclotomicElement& b);
CyclotomicElement cyclotomic_invert(const CyclotomicElement& a);

}  // namespace fermat
