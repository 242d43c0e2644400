#include "fermat/frobenius/frobenius_polynomial.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {
namespace {

using CyclotomicPoly = std::vector<CyclotomicElement>;  // constant term first

CyclotomicPoly poly_mul(const CyclotomicPoly& a, const CyclotomicPoly& b, int m) {
  CyclotomicPoly r(a.size() + b.size() - 1, CyclotomicElement::zero(m));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

Integer rational_integer(const CyclotomicElement& x) {
  if (!x.is_integral()) throw std::logic_error("Frobenius data is not integral: " + x.to_string());
  for (std::size_t j = 1; j < x.coeffs().size(); ++j)
    if (sgn(x.coeffs()[j]) != 0) throw std::logic_error("Frobenius data is not rational: " + x.to_string());
  return x.coeffs()[0];
}

void check_good(int m, std::uint64_t p) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidModulus, "m must be odd and at least 3");
  if (p < 3 || !arith::is_prime(p)) throw Error(ErrorCode::InvalidModulus, "p must be an odd prime");
  if (p % static_cast<std::uint64_t>(m) == 0 || std::gcd(p, static_cast<std::uint64_t>(m)) != 1)
    throw Error(ErrorCode::InvalidModulus, "p must not divide m");
}

class TableCache {
 public:
  TableCache(int m, std::uint64_t p, std::uint64_t bound) : m_(m), p_(p), bound_(bound) {}
  const CharacterSumTable& get(unsigned f) {
    auto it = tables_.find(f);
    if (it == tables_.end()) it = tables_.emplace(f, character_sum_table(m_, p_, f, bound_)).first;
    return it->second;
  }

 private:
  int m_;
  std::uint64_t p_, bound_;
  std::map<unsigned, CharacterSumTable> tables_;
};

}  // namespace

std::vector<std::vector<int>> frobenius_orbits(int m, std::uint64_t p) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  const long pm = static_cast<long>(p % static_cast<std::uint64_t>(m));
  for (int a = 1; a < m; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    std::vector<int> orbit;
    for (long b = a; !seen[static_cast<std::size_t>(b)]; b = b * pm % m) {
      seen[static_cast<std::size_t>(b)] = true;
      orbit.push_back(static_cast<int>(b));
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

CyclotomicElement orbit_eigenvalue(const CharacterSumTable& table, int a) {
  return CyclotomicElement::integer(table.m, -table.chi2_minus_one) * jacobi_from_table(table, a);
}

std::vector<CyclotomicElement> frobenius_roots(int m, std::uint64_t p) {
  check_good(m, p);
  if ((p - 1) % static_cast<std::uint64_t>(m) != 0) throw Error(ErrorCode::NotSplit, "p is not 1 mod m");
  const auto table = character_sum_table(m, p);
  std::vector<CyclotomicElement> roots;
  roots.reserve(static_cast<std::size_t>(m - 1));
  for (int a = 1; a < m; ++a) roots.push_back(orbit_eigenvalue(table, a));
  return roots;
}

FrobeniusData frobenius_polynomial(int m, std::uint64_t p, std::uint64_t bound) {
  check_good(m, p);
  const auto orbits = frobenius_orbits(m, p);
  for (const auto& o : orbits)
    if (o.size() > max_orbit_length)
      throw Error(ErrorCode::BoundExceeded, "Frobenius orbit of length " + std::to_string(o.size()) + " at p = " + std::to_string(p));

  TableCache tables(m, p, bound);
  const bool split = (p - 1) % static_cast<std::uint64_t>(m) == 0;
  FrobeniusData out;
  out.m = m;
  out.p = p;

  const auto divs = arith::divisors(m);
  CyclotomicPoly total{CyclotomicElement::integer(m, 1)};
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const int d = static_cast<int>(*it);
    if (d == 1) continue;
    CyclotomicPoly piece{CyclotomicElement::integer(m, 1)};
    CyclotomicElement first_root;
    for (const auto& o : orbits) {
      if (m / std::gcd(o.front(), m) != d) continue;
      const unsigned f = static_cast<unsigned>(o.size());
      const CyclotomicElement lambda = orbit_eigenvalue(tables.get(f), o.front());
      if (first_root.modulus() == 0) first_root = lambda;
      CyclotomicPoly factor(f + 1, CyclotomicElement::zero(m));
      factor[0] = -lambda;
      factor[f] = CyclotomicElement::integer(m, 1);
      piece = poly_mul(piece, factor, m);
    }
    FrobeniusFactor ff;
    ff.d = d;
    for (auto c = piece.rbegin(); c != piece.rend(); ++c) ff.coefficients.push_back(rational_integer(*c));
    if (split) {
      // the piece is a power of the minimal polynomial of its root; full orbit means equality
      bool full = true;
      for (auto u : arith::units(m))
        if (u % d != 1 && first_root.galois(u) == first_root) {
          full = false;
          break;
        }
      ff.irreducible = full;
    }
    out.factors.push_back(std::move(ff));
    total = poly_mul(total, piece, m);
  }

  std::vector<Integer> poly;
  for (auto c = total.rbegin(); c != total.rend(); ++c) poly.push_back(rational_integer(*c));
  out.trace = -poly[1].get_si();
  out.polynomial = std::move(poly);
  return out;
}

long frobenius_trace(int m, std::uint64_t p, unsigned k, std::uint64_t bound) {
  check_good(m, p);
  if (k == 0) throw Error(ErrorCode::InvalidModulus, "extension degree must be positive");
  TableCache tables(m, p, bound);
  CyclotomicElement sum = CyclotomicElement::zero(m);
  for (const auto& o : frobenius_orbits(m, p)) {
    const unsigned f = static_cast<unsigned>(o.size());
    if (k % f != 0) continue;
    const CyclotomicElement lambda = orbit_eigenvalue(tables.get(f), o.front());
    sum = sum + CyclotomicElement::integer(m, f) * lambda.pow(k / f);
  }
  return rational_integer(sum).get_si();
}

bool satisfies_functional_equation(const FrobeniusData& data) {
  if (!data.polynomial) return true;
  const auto& c = *data.polynomial;
  const std::size_t two_g = c.size() - 1;
  const std::size_t g = two_g / 2;
  Integer pk = 1;
  // c_{2g-i} = p^{g-i} c_i for i = g, g-1, ..., 0
  for (std::size_t i = g + 1; i-- > 0;) {
    if (c[two_g - i] != pk * c[i]) return false;
    pk *= static_cast<unsigned long>(data.p);
  }
  return true;
}

std::vector<int> factor_degrees(const FrobeniusData& data) {
  std::vector<int> out;
  for (const auto& f : data.factors) out.push_back(static_cast<int>(f.coefficients.size()) - 1);
  return out;
}

}  // namespace fermat
