#include "fermat/algebra/normal_form.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace fermat {
namespace {

struct Overflow {};

// Scalar primitives, one overload set per backend.  The 64-bit versions throw
// Overflow so the caller can redo the whole computation with GMP.

inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_neg(std::int64_t x) { return x < 0; }
inline bool is_neg(const Integer& x) { return sgn(x) < 0; }

inline void negate(std::int64_t& x) {
  if (x == INT64_MIN) throw Overflow{};
  x = -x;
}
inline void negate(Integer& x) { mpz_neg(x.get_mpz_t(), x.get_mpz_t()); }

// x -= q * y
inline void submul(std::int64_t& x, std::int64_t q, std::int64_t y) {
  std::int64_t t;
  if (__builtin_mul_overflow(q, y, &t) || __builtin_sub_overflow(x, t, &x)) throw Overflow{};
}
inline void submul(Integer& x, const Integer& q, const Integer& y) {
  mpz_submul(x.get_mpz_t(), q.get_mpz_t(), y.get_mpz_t());
}

inline bool divides(std::int64_t a, std::int64_t b) { return b % a == 0; }
inline bool divides(const Integer& a, const Integer& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

inline std::int64_t exact_quotient(std::int64_t b, std::int64_t a) { return b / a; }
inline Integer exact_quotient(const Integer& b, const Integer& a) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
  return q;
}

// floor(x / p) for p > 0
inline std::int64_t floor_quotient(std::int64_t x, std::int64_t p) {
  std::int64_t q = x / p;
  if ((x % p) < 0) --q;
  return q;
}
inline Integer floor_quotient(const Integer& x, const Integer& p) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return q;
}

// g = s*a + t*b with g = gcd(a, b) > 0
inline void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}
inline void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// (x, y) <- (s x + t y, u x + w y)
inline void combine(std::int64_t& x, std::int64_t& y, std::int64_t s, std::int64_t t, std::int64_t u,
                    std::int64_t w) {
  std::int64_t a, b, c, d, nx, ny;
  if (__builtin_mul_overflow(s, x, &a) || __builtin_mul_overflow(t, y, &b) || __builtin_add_overflow(a, b, &nx) ||
      __builtin_mul_overflow(u, x, &c) || __builtin_mul_overflow(w, y, &d) || __builtin_add_overflow(c, d, &ny))
    throw Overflow{};
  x = nx;
  y = ny;
}
inline void combine(Integer& x, Integer& y, const Integer& s, const Integer& t, const Integer& u, const Integer& w) {
  Integer nx = s * x + t * y;
  y = u * x + w * y;
  x = std::move(nx);
}

// Incrementally maintained row echelon basis of a lattice in Z^n.
template <class T>
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n) {}

  void insert(std::vector<T> v) {
    std::size_t lead = 0, i = 0;
    for (;;) {
      while (lead < n_ && is_zero(v[lead])) ++lead;
      if (lead == n_) return;
      while (i < rows_.size() && pivots_[i] < lead) ++i;
      if (i == rows_.size() || pivots_[i] > lead) {
        if (is_neg(v[lead]))
          for (std::size_t j = lead; j < n_; ++j) negate(v[j]);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(i), lead);
        return;
      }
      std::vector<T>& r = rows_[i];
      const T a = r[lead];
      const T b = v[lead];
      if (divides(a, b)) {
        const T q = exact_quotient(b, a);
        for (std::size_t j = lead; j < n_; ++j)
          if (!is_zero(r[j])) submul(v[j], q, r[j]);
      } else {
        T g, s, t;
        ext_gcd(a, b, g, s, t);
        T u = exact_quotient(b, g);
        negate(u);
        const T w = exact_quotient(a, g);
        for (std::size_t j = lead; j < n_; ++j) combine(r[j], v[j], s, t, u, w);
      }
      ++i;
    }
  }

  void reduce_above() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      const T p = rows_[i][c];
      for (std::size_t k = 0; k < i; ++k) {
        const T q = floor_quotient(rows_[k][c], p);
        if (is_zero(q)) continue;
        for (std::size_t j = c; j < n_; ++j)
          if (!is_zero(rows_[i][j])) submul(rows_[k][j], q, rows_[i][j]);
      }
    }
  }

  const std::vector<std::vector<T>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t n_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

bool fits_int64(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i))
      if (!x.fits_slong_p()) return false;
  return true;
}

IntegerMatrix basis_int64(const IntegerMatrix& m) {
  Echelon<std::int64_t> e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::int64_t> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(i, j).get_si();
    e.insert(std::move(v));
  }
  e.reduce_above();
  IntegerMatrix h(e.rows().size(), m.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = static_cast<long>(e.rows()[i][j]);
  return h;
}

IntegerMatrix basis_mpz(const IntegerMatrix& m) {
  Echelon<Integer> e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row_vector(i));
  e.reduce_above();
  IntegerMatrix h(e.rows().size(), m.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = e.rows()[i][j];
  return h;
}

}  // namespace

IntegerMatrix hermite_basis(const IntegerMatrix& m) {
  if (m.cols() == 0) return IntegerMatrix(0, 0);
  if (fits_int64(m)) {
    try {
      return basis_int64(m);
    } catch (const Overflow&) {
    }
  }
  return basis_mpz(m);
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  // Row-reduce [M | I]; rows with a pivot in the identity part span the left kernel.
  Echelon<Integer> e(c + r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Integer> v(c + r);
    for (std::size_t j = 0; j < c; ++j) v[j] = m(i, j);
    v[c + i] = 1;
    e.insert(std::move(v));
  }
  e.reduce_above();
  HermiteForm out{IntegerMatrix(r, c), IntegerMatrix(r, r)};
  for (std::size_t i = 0; i < e.rows().size(); ++i) {
    const auto& row = e.rows()[i];
    if (e.pivots()[i] < c)
      for (std::size_t j = 0; j < c; ++j) out.H(i, j) = row[j];
    for (std::size_t j = 0; j < r; ++j) out.U(i, j) = row[c + j];
  }
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  SmithForm out{m, IntegerMatrix::identity(r), IntegerMatrix::identity(c)};
  IntegerMatrix& D = out.D;
  IntegerMatrix& S = out.S;
  IntegerMatrix& T = out.T;

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {  // row dst -= q row src
    for (std::size_t j = 0; j < c; ++j) D(dst, j) -= q * D(src, j);
    for (std::size_t j = 0; j < r; ++j) S(dst, j) -= q * S(src, j);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < r; ++i) D(i, dst) -= q * D(i, src);
    for (std::size_t i = 0; i < c; ++i) T(i, dst) -= q * T(i, src);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < c; ++i) std::swap(T(i, a), T(i, b));
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (sgn(D(i, j)) != 0 && (bi == r || abs(D(i, j)) < abs(D(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == r) return out;
      D.swap_rows(t, bi);
      S.swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (sgn(D(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        row_op(i, t, q);
        if (sgn(D(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (sgn(D(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        col_op(j, t, q);
        if (sgn(D(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!divides(D(t, t), D(i, j))) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_op(t, bad, Integer(-1));
    }
    if (sgn(D(t, t)) < 0) {
      for (std::size_t j = 0; j < c; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < r; ++j) S(t, j) = -S(t, j);
    }
  }
  return out;
}

std::vector<Integer> elementary_divisors(const IntegerMatrix& m) {
  // The SNF of the HNF basis has the same invariants and is much smaller.
  const IntegerMatrix h = hermite_basis(m);
  const SmithForm s = smith_normal_form(h);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i)
    if (sgn(s.D(i, i)) != 0) out.push_back(s.D(i, i));
  return out;
}

std::size_t rank(const IntegerMatrix& m) { return hermite_basis(m).rows(); }

std::vector<std::size_t> pivot_columns(const IntegerMatrix& echelon) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    std::size_t j = 0;
    while (j < echelon.cols() && sgn(echelon(i, j)) == 0) ++j;
    if (j < echelon.cols()) out.push_back(j);
  }
  return out;
}

}  // namespace fermat
