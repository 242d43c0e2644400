#include "fermat/frobenius/stickelberger.hpp"

#include <map>

#include "fermat/algebra/arith.hpp"
#include "fermat/algebra/lattice.hpp"
#include "fermat/error.hpp"

namespace fermat {

std::vector<PrimeAboveP> primes_above(int m, std::uint64_t p) {
  if (p < 3 || !arith::is_prime(p)) throw Error(ErrorCode::InvalidModulus, "p must be an odd prime");
  if ((p - 1) % static_cast<std::uint64_t>(m) != 0) throw Error(ErrorCode::NotSplit, "p is not 1 mod m");
  const std::uint64_t w1 = arith::powmod(arith::smallest_primitive_root(p), (p - 1) / static_cast<std::uint64_t>(m), p);
  std::vector<PrimeAboveP> out;
  for (auto t : arith::units(m)) out.push_back({static_cast<long>(t), arith::powmod(w1, static_cast<std::uint64_t>(t), p)});
  return out;
}

IntegerMatrix ideal_power_basis(int m, std::uint64_t p, std::uint64_t w, int k) {
  const auto pi = CyclotomicElement::zeta(m, 1) - CyclotomicElement::integer(m, Integer(static_cast<unsigned long>(w)));
  const auto pp = CyclotomicElement::integer(m, Integer(static_cast<unsigned long>(p)));
  const int phi = static_cast<int>(arith::euler_phi(m));
  IntegerMatrix gens(0, static_cast<std::size_t>(phi));
  for (int j = 0; j <= k; ++j) {
    const CyclotomicElement base = pp.pow(j) * pi.pow(k - j);
    for (int i = 0; i < phi; ++i) gens.append_row((base * CyclotomicElement::zeta(m, i)).coeffs());
  }
  return Lattice::from_generators(gens).basis();
}

namespace {

class PowerCache {
 public:
  PowerCache(int m, std::uint64_t p, std::uint64_t w) : m_(m), p_(p), w_(w) {}
  const Lattice& get(int k) {
    auto it = powers_.find(k);
    if (it == powers_.end()) it = powers_.emplace(k, Lattice::from_generators(ideal_power_basis(m_, p_, w_, k))).first;
    return it->second;
  }

 private:
  int m_;
  std::uint64_t p_, w_;
  std::map<int, Lattice> powers_;
};

int valuation_with(PowerCache& cache, const CyclotomicElement& x, int cap) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "valuation of zero");
  if (!x.is_integral()) throw Error(ErrorCode::DimensionMismatch, "valuation needs an algebraic integer");
  int k = 0;
  while (k < cap && cache.get(k + 1).contains(x.coeffs())) ++k;
  return k;
}

}  // namespace

int ideal_valuation(const CyclotomicElement& x, std::uint64_t p, std::uint64_t w, int cap) {
  PowerCache cache(x.modulus(), p, w);
  return valuation_with(cache, x, cap);
}

IntegerMatrix stickelberger_valuations(const std::vector<JacobiSum>& sums) {
  if (sums.empty()) throw Error(ErrorCode::DimensionMismatch, "no Jacobi sums given");
  const int m = sums.front().m;
  const std::uint64_t p = sums.front().p;
  for (const auto& j : sums)
    if (j.m != m || j.p != p) throw Error(ErrorCode::DimensionMismatch, "Jacobi sums must share m and p");
  const auto primes = primes_above(m, p);
  IntegerMatrix v(primes.size(), sums.size());
  for (std::size_t r = 0; r < primes.size(); ++r) {
    PowerCache cache(m, p, primes[r].w);
    for (std::size_t c = 0; c < sums.size(); ++c) v(r, c) = valuation_with(cache, sums[c].value, 64);
  }
  return v;
}

}  // namespace fermat
