#include "fermat/frobenius/torsion.hpp"

#include <stdexcept>

#include "fermat/algebra/lattice.hpp"
#include "fermat/error.hpp"
#include "fermat/frobenius/frobenius_polynomial.hpp"
#include "fermat/frobenius/jacobi.hpp"
#include "fermat/frobenius/stickelberger.hpp"

namespace fermat {

CyclotomicElement evaluate_relation(const std::vector<CyclotomicElement>& gens, std::span<const long> e,
                                    std::uint64_t p) {
  if (gens.size() != e.size() || gens.empty()) throw Error(ErrorCode::DimensionMismatch, "relation length differs from generator count");
  const int m = gens.front().modulus();
  CyclotomicElement num = CyclotomicElement::integer(m, 1);
  CyclotomicElement den_conj = CyclotomicElement::integer(m, 1);
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) num = num * gens[i].pow(e[i]);
    if (e[i] < 0) {
      den_conj = den_conj * gens[i].conjugate().pow(-e[i]);
      s -= e[i];
    }
  }
  Integer ps;
  mpz_ui_pow_ui(ps.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(s));
  return CyclotomicElement(m, (num * den_conj).coeffs(), ps);
}

SplitTestResult torsion_free_test(int m, std::uint64_t p) {
  if ((p - 1) % static_cast<std::uint64_t>(m) != 0) throw Error(ErrorCode::NotSplit, "p is not 1 mod m");
  const auto sums = jacobi_sums(m, p);
  const auto roots = frobenius_roots(m, p);
  // roots differ from the sums by a sign, so the valuations agree
  const IntegerMatrix v = stickelberger_valuations(sums);
  const Lattice kernel = integer_kernel(v);

  SplitTestResult r;
  r.m = m;
  r.p = p;
  r.relation_rank = static_cast<int>(kernel.rank());
  for (std::size_t i = 0; i < kernel.rank(); ++i) {
    std::vector<long> e;
    for (const auto& x : kernel.basis().row(i)) e.push_back(x.get_si());
    const CyclotomicElement value = evaluate_relation(roots, e, p);
    const auto root = value.as_root_of_unity();
    if (!root) throw std::logic_error("relation product is not a root of unity at p = " + std::to_string(p));
    if (value.is_one()) continue;
    r.torsion_free = false;
    r.witness = std::move(e);
    r.witness_root = root;
    break;
  }
  return r;
}

}  // namespace fermat
