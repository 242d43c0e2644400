#include "fermat/algebra/laurent.hpp"

#include <sstream>

#include "fermat/error.hpp"

namespace fermat {

LaurentPolynomial LaurentPolynomial::constant(std::size_t num_vars, const Integer& c) {
  LaurentPolynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

void LaurentPolynomial::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != n_) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Integer LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "variable counts differ");
  LaurentPolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "variable counts differ");
  LaurentPolynomial r(a.n_);
  LaurentPolynomial::Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial result = constant(n_, 1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  LaurentPolynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Exponent ne(e);
    for (auto& x : ne) x = -x;
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

std::string LaurentPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i] != 0) os << "*z" << (i + 1) << '^' << e[i];
  }
  if (first) os << '0';
  return os.str();
}

Integer constant_term_power(const LaurentPolynomial& f, unsigned n) {
  if (n == 0) return 1;
  const LaurentPolynomial lo = f.pow(n / 2);
  const LaurentPolynomial hi = (n % 2 == 0) ? lo : lo * f;
  Integer total = 0;
  LaurentPolynomial::Exponent neg(f.num_vars());
  for (const auto& [e, c] : hi.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    auto it = lo.terms().find(neg);
    if (it != lo.terms().end()) total += c * it->second;
  }
  return total;
}

}  // namespace fermat
