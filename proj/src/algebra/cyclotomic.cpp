#include "fermat/algebra/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {
namespace {

// Exact division of polynomials with integer coefficients by a monic divisor.
IntVector poly_div_monic(IntVector num, const IntVector& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  IntVector q(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    q[i - dn] = c;
    if (sgn(c) != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

IntVector cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidModulus, "cyclotomic polynomial needs m >= 1");
  IntVector p(static_cast<std::size_t>(m) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (auto d : arith::divisors(m)) {
    if (d == m) continue;
    p = poly_div_monic(p, cyclotomic_polynomial(static_cast<int>(d)));
  }
  return p;
}

CyclotomicField::CyclotomicField(int m) : m_(m), phi_(static_cast<int>(arith::euler_phi(m))) {
  poly_ = cyclotomic_polynomial(m);
  powers_.resize(static_cast<std::size_t>(m));
  IntVector cur(static_cast<std::size_t>(phi_));
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    powers_[static_cast<std::size_t>(k)] = cur;
    // multiply by x and reduce by the monic Phi_m
    const Integer top = cur.back();
    for (std::size_t j = cur.size() - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (sgn(top) != 0)
      for (std::size_t j = 0; j < cur.size(); ++j) cur[j] -= top * poly_[j];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  if (m < 1) throw Error(ErrorCode::InvalidModulus, "cyclotomic modulus must be positive");
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(m);
  cache.emplace(m, f);
  return f;
}

CyclotomicElement::CyclotomicElement(int m, IntVector coeffs, Integer den)
    : field_(CyclotomicField::get(m)), coeffs_(std::move(coeffs)), den_(std::move(den)) {
  if (coeffs_.size() != static_cast<std::size_t>(field_->degree()))
    throw Error(ErrorCode::DimensionMismatch, "coefficient vector length must equal phi(m)");
  if (sgn(den_) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  normalize();
}

CyclotomicElement CyclotomicElement::zero(int m) {
  return {m, IntVector(static_cast<std::size_t>(arith::euler_phi(m)))};
}

CyclotomicElement CyclotomicElement::integer(int m, const Integer& c) {
  IntVector v(static_cast<std::size_t>(arith::euler_phi(m)));
  v[0] = c;
  return {m, std::move(v)};
}

CyclotomicElement CyclotomicElement::zeta(int m, long k) {
  auto f = CyclotomicField::get(m);
  return {m, f->power(static_cast<int>(arith::mod(k, m)))};
}

CyclotomicElement CyclotomicElement::from_powers(int m, const IntVector& by_power) {
  auto f = CyclotomicField::get(m);
  IntVector v(static_cast<std::size_t>(f->degree()));
  for (std::size_t k = 0; k < by_power.size(); ++k) {
    if (sgn(by_power[k]) == 0) continue;
    const IntVector& pk = f->power(static_cast<int>(k % static_cast<std::size_t>(m)));
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(pk[j]) != 0) v[j] += by_power[k] * pk[j];
  }
  return {m, std::move(v)};
}

void CyclotomicElement::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : coeffs_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : coeffs_) {
    if (g == 1) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g == 1) return;
  for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CyclotomicElement::is_one() const {
  if (den_ != 1 || coeffs_.empty() || coeffs_[0] != 1) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) return false;
  return true;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {
void require_same_field(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::DimensionMismatch, "cyclotomic moduli differ");
}
}  // namespace

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_field(a, b);
  IntVector v(a.coeffs_.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.coeffs_[j] * b.den_ + b.coeffs_[j] * a.den_;
  return {a.modulus(), std::move(v), a.den_ * b.den_};
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) { return a + (-b); }

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_field(a, b);
  const int m = a.modulus();
  const std::size_t n = a.coeffs_.size();
  // Product modulo x^m - 1, then reduce each power of x.
  IntVector cyc(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpz_addmul(cyc[(i + j) % static_cast<std::size_t>(m)].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  CyclotomicElement r = CyclotomicElement::from_powers(m, cyc);
  if (a.den_ != 1 || b.den_ != 1) {
    r.den_ = a.den_ * b.den_;
    r.normalize();
  }
  return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  return a.modulus() == b.modulus() && a.den_ == b.den_ && a.coeffs_ == b.coeffs_;
}

CyclotomicElement CyclotomicElement::galois(long k) const {
  const int m = modulus();
  const long kk = arith::mod(k, m);
  if (std::gcd(kk, static_cast<long>(m)) != 1) throw Error(ErrorCode::InvalidModulus, "Galois exponent must be a unit");
  IntVector by_power(static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    by_power[static_cast<std::size_t>((static_cast<long>(j) * kk) % m)] += coeffs_[j];
  CyclotomicElement r = from_powers(m, by_power);
  r.den_ = den_;
  return r;
}

std::pair<Integer, Integer> CyclotomicElement::norm() const {
  const int m = modulus();
  CyclotomicElement prod = integer(m, 1);
  CyclotomicElement num(m, coeffs_);
  for (auto k : arith::units(m)) prod = prod * num.galois(k);
  Integer d = 1;
  for (int i = 0; i < field_->degree(); ++i) d *= den_;
  Integer n = prod.coeffs_[0];
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (sgn(g) != 0 && g != 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const int m = modulus();
  // (num/den)^{-1} = den * prod_{k != 1} sigma_k(num) / N(num)
  CyclotomicElement num(m, coeffs_);
  CyclotomicElement others = integer(m, 1);
  for (auto k : arith::units(m))
    if (k != 1) others = others * num.galois(k);
  CyclotomicElement full = others * num;
  const Integer n = full.coeffs_[0];  // N(num), a nonzero integer
  IntVector v = others.coeffs_;
  for (auto& c : v) c *= den_;
  return {m, std::move(v), n};
}

CyclotomicElement CyclotomicElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicElement result = integer(modulus(), 1);
  CyclotomicElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<std::pair<int, long>> CyclotomicElement::as_root_of_unity() const {
  if (den_ != 1) return std::nullopt;
  const int m = modulus();
  for (int sign : {1, -1}) {
    for (int k = 0; k < m; ++k) {
      const IntVector& pk = field_->power(k);
      bool eq = true;
      for (std::size_t j = 0; j < coeffs_.size() && eq; ++j) eq = (sign > 0 ? coeffs_[j] == pk[j] : coeffs_[j] == -pk[j]);
      if (eq) return std::pair{sign, static_cast<long>(k)};
    }
  }
  return std::nullopt;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  os << '(';
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    if (!first) os << (sgn(coeffs_[j]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[j]) < 0) os << '-';
    Integer a = abs(coeffs_[j]);
    if (j == 0) os << a;
    else {
      if (a != 1) os << a << '*';
      os << "z";
      if (j > 1) os << '^' << j;
    }
    first = false;
  }
  if (first) os << '0';
  os << ')';
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

CyclotomicElement cyclotomic_mul(const CyclotomicElement& a, const CyclotomicElement& b) { return a * b; }
CyclotomicElement cyclotomic_invert(const CyclotomicElement& a) { return a.inverse(); }

}  // namespace fermat
