#pragma once

#include <map>
#include <string>
#include <vector>

#include "fermat/algebra/integer_matrix.hpp"

namespace fermat {

/// Sparse multivariate Laurent polynomial with integer coefficients.
class LaurentPolynomial {
 public:
  using Exponent = std::vector<long>;
  using Terms = std::map<Exponent, Integer>;

  explicit LaurentPolynomial(std::size_t num_vars = 0) : n_(num_vars) {}
  static LaurentPolynomial constant(std::size_t num_vars, const Integer& c);

  std::size_t num_vars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& e, const Integer& c);
  Integer coefficient(const Exponent& e) const;
  Integer constant_term() const { return coefficient(Exponent(n_, 0)); }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

  LaurentPolynomial pow(unsigned n) const;
  /// f(z^{-1})
  LaurentPolynomial inverted() const;

  std::string to_string() const;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Constant term of f^n, via c_0(f^n) = sum_e c_e(f^a) c_{-e}(f^b) with a + b = n.
Integer constant_term_power(const LaurentPolynomial& f, unsigned n);

}  // namespace fermat
