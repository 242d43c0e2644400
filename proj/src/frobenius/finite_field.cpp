#include "fermat/frobenius/finite_field.hpp"

#include <algorithm>

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {
namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p, b nonzero
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv = static_cast<std::uint64_t>(arith::inverse_mod(static_cast<std::int64_t>(b.back()), static_cast<std::int64_t>(p)));
  while (a.size() > db) {
    const std::uint64_t c = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + (p - c) * b[j]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^e) mod f
Poly frobenius_power(const Poly& f, std::uint64_t p, unsigned e) {
  Poly x = poly_mod({0, 1}, f, p);
  for (unsigned i = 0; i < e; ++i) {
    Poly result{1}, base = x;
    for (std::uint64_t n = p; n > 0; n >>= 1) {
      if (n & 1) result = poly_mulmod(result, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    x = std::move(result);
  }
  return x;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  Poly x{0, 1};
  Poly xq = frobenius_power(f, p, k);
  if (poly_mod(xq, f, p) != poly_mod(x, f, p)) return false;
  for (auto r : arith::prime_factors(k)) {
    Poly h = frobenius_power(f, p, k / static_cast<unsigned>(r));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k), q_(1) {
  if (p < 2 || p >= (1ULL << 31) || !arith::is_prime(p)) throw Error(ErrorCode::InvalidModulus, "characteristic must be a prime below 2^31");
  if (k == 0) throw Error(ErrorCode::InvalidModulus, "extension degree must be positive");
  for (unsigned i = 0; i < k; ++i) {
    if (q_ > (1ULL << 62) / p) throw Error(ErrorCode::BoundExceeded, "field order overflows 64 bits");
    q_ *= p;
  }
  f_.assign(k + 1, 0);
  f_[k] = 1;
  if (k == 1) return;
  for (std::uint64_t i = 0; i < q_; ++i) {
    Element low = from_index(i);
    for (unsigned j = 0; j < k; ++j) f_[j] = low[j];
    if (f_[0] != 0 && is_irreducible_mod_p(f_, p_)) return;
  }
  throw Error(ErrorCode::InvalidModulus, "no irreducible polynomial found");
}

FiniteField::Element FiniteField::one() const { return constant(1); }

FiniteField::Element FiniteField::constant(std::uint64_t c) const {
  Element e(k_, 0);
  e[0] = c % p_;
  return e;
}

FiniteField::Element FiniteField::from_index(std::uint64_t i) const {
  Element e(k_, 0);
  for (unsigned j = 0; j < k_; ++j, i /= p_) e[j] = i % p_;
  return e;
}

std::uint64_t FiniteField::index(const Element& a) const {
  std::uint64_t i = 0;
  for (unsigned j = k_; j-- > 0;) i = i * p_ + a[j];
  return i;
}

FiniteField::Element FiniteField::add(const Element& a, const Element& b) const {
  Element r(k_);
  for (unsigned j = 0; j < k_; ++j) {
    r[j] = a[j] + b[j];
    if (r[j] >= p_) r[j] -= p_;
  }
  return r;
}

FiniteField::Element FiniteField::sub(const Element& a, const Element& b) const {
  Element r(k_);
  for (unsigned j = 0; j < k_; ++j) r[j] = a[j] >= b[j] ? a[j] - b[j] : a[j] + p_ - b[j];
  return r;
}

FiniteField::Element FiniteField::mul(const Element& a, const Element& b) const {
  if (k_ == 1) return {a[0] * b[0] % p_};
  std::vector<std::uint64_t> r(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
  }
  // f is monic: x^k = -(f_0 + ... + f_{k-1} x^{k-1})
  for (std::size_t i = r.size(); i-- > k_;) {
    const std::uint64_t c = r[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < k_; ++j) r[i - k_ + j] = (r[i - k_ + j] + (p_ - c) * f_[j]) % p_;
  }
  r.resize(k_);
  return r;
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

bool FiniteField::is_zero(const Element& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

FiniteField::Element FiniteField::primitive_element() const {
  const auto factors = arith::prime_factors(q_ - 1);
  const Element id = one();
  for (std::uint64_t i = 1; i < q_; ++i) {
    Element g = from_index(i);
    bool ok = true;
    for (auto r : factors)
      if (pow(g, (q_ - 1) / r) == id) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error(ErrorCode::InvalidModulus, "no primitive element");
}

std::vector<std::int8_t> quadratic_character_table(const FiniteField& field) {
  const std::uint64_t q = field.order();
  std::vector<std::int8_t> chi(q, -1);
  chi[0] = 0;
  if (field.degree() == 1) {
    const std::uint64_t p = q;
    // consecutive squares differ by odd numbers
    std::uint64_t sq = 0;
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) {
      sq += 2 * x - 1;
      if (sq >= p) sq -= p;
      chi[sq] = 1;
    }
    return chi;
  }
  for (std::uint64_t i = 1; i < q; ++i) {
    auto x = field.from_index(i);
    chi[field.index(field.mul(x, x))] = 1;
  }
  return chi;
}

}  // namespace fermat
