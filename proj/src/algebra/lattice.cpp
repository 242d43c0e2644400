#include "fermat/algebra/lattice.hpp"

#include "fermat/algebra/normal_form.hpp"
#include "fermat/error.hpp"

namespace fermat {

Lattice::Lattice(std::size_t ambient_rank) : n_(ambient_rank), basis_(0, ambient_rank) {}

Lattice Lattice::from_generators(const IntegerMatrix& generators) {
  Lattice l(generators.cols());
  if (generators.rows() > 0) l.basis_ = hermite_basis(generators);
  if (l.basis_.rows() == 0) l.basis_ = IntegerMatrix(0, l.n_);
  return l;
}

Lattice Lattice::standard(std::size_t n) {
  Lattice l(n);
  l.basis_ = IntegerMatrix::identity(n);
  return l;
}

Lattice Lattice::coordinate(std::size_t n, std::span<const std::size_t> coords) {
  IntegerMatrix g(coords.size(), n);
  for (std::size_t i = 0; i < coords.size(); ++i) g(i, coords[i]) = 1;
  return from_generators(g);
}

bool Lattice::contains(std::span<const Integer> v) const {
  if (v.size() != n_) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient rank");
  IntVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t c = 0;
    while (sgn(basis_(i, c)) == 0) ++c;
    for (std::size_t j = 0; j < c; ++j)
      if (sgn(w[j]) != 0) return false;
    if (sgn(w[c]) == 0) continue;
    if (!mpz_divisible_p(w[c].get_mpz_t(), basis_(i, c).get_mpz_t())) return false;
    Integer q;
    mpz_divexact(q.get_mpz_t(), w[c].get_mpz_t(), basis_(i, c).get_mpz_t());
    for (std::size_t j = c; j < n_; ++j)
      if (sgn(basis_(i, j)) != 0) w[j] -= q * basis_(i, j);
  }
  for (const auto& x : w)
    if (sgn(x) != 0) return false;
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::AmbientMismatch, "ambient ranks differ");
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

bool Lattice::is_saturated() const { return saturate(*this) == *this; }

Lattice integer_kernel(const IntegerMatrix& m) {
  const HermiteForm hf = hermite_normal_form(m.transpose());
  // Rows of U paired with zero rows of H give v with v * M^T = 0.
  const std::size_t rk = rank(hf.H);
  IntegerMatrix k(hf.U.rows() - rk, m.cols());
  for (std::size_t i = rk; i < hf.U.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k(i - rk, j) = hf.U(i, j);
  Lattice out = Lattice::from_generators(k);
  if (out.ambient_rank() != m.cols()) out = Lattice(m.cols());
  return out;
}

std::optional<Integer> sublattice_index(const Lattice& sub, const Lattice& ambient) {
  if (sub.ambient_rank() != ambient.ambient_rank()) throw Error(ErrorCode::AmbientMismatch, "ambient ranks differ");
  if (!ambient.contains(sub)) throw Error(ErrorCode::NotSublattice, "lattice is not contained in the ambient lattice");
  if (sub.rank() < ambient.rank()) return std::nullopt;
  // Equal rank and containment force identical pivot columns.
  const auto ps = pivot_columns(sub.basis());
  const auto pa = pivot_columns(ambient.basis());
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    num *= sub.basis()(i, ps[i]);
    den *= ambient.basis()(i, pa[i]);
  }
  return Integer(num / den);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw Error(ErrorCode::AmbientMismatch, "ambient ranks differ");
  return Lattice::from_generators(IntegerMatrix::vconcat(a.basis(), b.basis()));
}

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  const Lattice k = integer_kernel(l.basis());
  if (k.rank() == 0) return Lattice::standard(l.ambient_rank());
  return integer_kernel(k.basis());
}

}  // namespace fermat
