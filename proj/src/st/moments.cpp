#include "fermat/st/moments.hpp"

#include "fermat/error.hpp"
#include "fermat/hodge/torus.hpp"

namespace fermat {
namespace {

IntegerMatrix symplectic_form(int g) {
  IntegerMatrix w(static_cast<std::size_t>(2 * g), static_cast<std::size_t>(2 * g));
  for (int i = 0; i < g; ++i) {
    w(static_cast<std::size_t>(2 * i), static_cast<std::size_t>(2 * i + 1)) = 1;
    w(static_cast<std::size_t>(2 * i + 1), static_cast<std::size_t>(2 * i)) = -1;
  }
  return w;
}

// Column index and sign of the single nonzero entry in each row.
std::vector<std::pair<std::size_t, int>> signed_permutation(const IntegerMatrix& p) {
  std::vector<std::pair<std::size_t, int>> out;
  std::vector<bool> used(p.cols(), false);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    std::size_t col = p.cols();
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (sgn(p(i, j)) == 0) continue;
      if (col != p.cols() || abs(p(i, j)) != 1) throw Error(ErrorCode::NotNormalizing, "component representative is not a signed permutation");
      col = j;
    }
    if (col == p.cols() || used[col]) throw Error(ErrorCode::NotNormalizing, "component representative is not a signed permutation");
    used[col] = true;
    out.emplace_back(col, sgn(p(i, col)));
  }
  return out;
}

// Torus character carried by diagonal coordinate i: +v_j on u_j, -v_j on conj u_j.
std::vector<long> coordinate_character(const TorusEmbedding& t, std::size_t i) {
  std::vector<long> v(static_cast<std::size_t>(t.free_rank));
  const std::size_t j = i / 2;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const long c = t.parametrization(j, k).get_si();
    v[k] = (i % 2 == 0) ? c : -c;
  }
  return v;
}

bool diagonal_point_in_torus(const TorusEmbedding& t, const IntegerMatrix& p) {
  if (!p.is_diagonal()) return false;
  for (int j = 0; j < t.g; ++j) {
    const auto& a = p(static_cast<std::size_t>(2 * j), static_cast<std::size_t>(2 * j));
    const auto& b = p(static_cast<std::size_t>(2 * j + 1), static_cast<std::size_t>(2 * j + 1));
    if (abs(a) != 1 || a != b) return false;
  }
  const IntegerMatrix& r = t.relations.basis();
  for (std::size_t w = 0; w < r.rows(); ++w) {
    Integer odd = 0;
    for (int j = 0; j < t.g; ++j)
      if (p(static_cast<std::size_t>(2 * j), static_cast<std::size_t>(2 * j)) == -1) odd += r(w, static_cast<std::size_t>(j));
    if (mpz_odd_p(odd.get_mpz_t())) return false;
  }
  return true;
}

}  // namespace

ComponentRep ComponentRep::from_matrix(const IntegerMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw Error(ErrorCode::NotNormalizing, "component representative must be 2g x 2g");
  signed_permutation(m);
  const int g = static_cast<int>(m.rows() / 2);
  const IntegerMatrix w = symplectic_form(g);
  if (m.transpose() * w * m != w) throw Error(ErrorCode::NotNormalizing, "component representative is not symplectic");
  ComponentRep rep{2 * g, m, 0};
  const IntegerMatrix id = IntegerMatrix::identity(m.rows());
  IntegerMatrix p = m;
  for (int k = 1; k <= 4 * (2 * g) * (2 * g) + 8; ++k) {
    if (p == id) {
      rep.order = k;
      return rep;
    }
    p = p * m;
  }
  throw Error(ErrorCode::NotNormalizing, "component representative has no small finite order");
}

ComponentRep ComponentRep::identity(int g) { return from_matrix(IntegerMatrix::identity(static_cast<std::size_t>(2 * g))); }

ComponentRep gamma_j9() {
  IntegerMatrix m(8, 8);
  auto put_identity = [&](std::size_t bi, std::size_t bj) {
    m(2 * bi, 2 * bj) = 1;
    m(2 * bi + 1, 2 * bj + 1) = 1;
  };
  auto put_j = [&](std::size_t bi, std::size_t bj) {
    m(2 * bi, 2 * bj + 1) = 1;
    m(2 * bi + 1, 2 * bj) = -1;
  };
  put_identity(0, 1);
  put_identity(1, 3);
  put_j(2, 2);
  put_j(3, 0);
  return ComponentRep::from_matrix(m);
}

TorusEmbedding sato_tate_torus(int m) {
  if (m % 2 == 1) return hodge_torus(m);
  if (m % 4 == 0) throw Error(ErrorCode::Unsupported, "no Sato-Tate torus for m divisible by 4");
  const TorusEmbedding half = hodge_torus(m / 2);
  TorusEmbedding t;
  t.g = 2 * half.g;
  t.free_rank = half.free_rank;
  t.free_coordinates = half.free_coordinates;
  t.parametrization = IntegerMatrix::vconcat(half.parametrization, half.parametrization);
  t.relations = relation_lattice(t.parametrization);
  return t;
}

LaurentPolynomial identity_trace_polynomial(const TorusEmbedding& t) {
  return coset_trace_polynomial(t, IntegerMatrix::identity(static_cast<std::size_t>(2 * t.g)));
}

LaurentPolynomial coset_trace_polynomial(const TorusEmbedding& t, const IntegerMatrix& rep_power) {
  LaurentPolynomial f(static_cast<std::size_t>(t.free_rank));
  for (std::size_t i = 0; i < rep_power.rows(); ++i)
    if (sgn(rep_power(i, i)) != 0) f.add_term(coordinate_character(t, i), rep_power(i, i));
  return f;
}

namespace {

void check_bound(int max_n) {
  if (max_n < 0 || max_n > max_moment_bound)
    throw Error(ErrorCode::BoundExceeded, "moment index above " + std::to_string(max_moment_bound));
}

std::vector<Rational> moments_of(const LaurentPolynomial& f, int max_n) {
  std::vector<Rational> out;
  for (int n = 0; n <= max_n; ++n) out.emplace_back(constant_term_power(f, static_cast<unsigned>(n)));
  return out;
}

}  // namespace

MomentReport identity_moments(const TorusEmbedding& t, int max_n) {
  check_bound(max_n);
  MomentReport r;
  r.field = "identity-component";
  r.moments = moments_of(identity_trace_polynomial(t), max_n);
  return r;
}

void check_normalizes(const TorusEmbedding& t, const ComponentRep& rep) {
  if (rep.size2g != 2 * t.g) throw Error(ErrorCode::NotNormalizing, "representative size does not match 2g");
  const auto perm = signed_permutation(rep.matrix);
  // (P U P^-1)_{ii} = U_{pi(i) pi(i)}, so coordinate i picks up the character of pi(i).
  std::vector<std::vector<long>> conj(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) conj[i] = coordinate_character(t, perm[i].first);
  for (int j = 0; j < t.g; ++j) {
    auto neg = conj[static_cast<std::size_t>(2 * j)];
    for (auto& x : neg) x = -x;
    if (neg != conj[static_cast<std::size_t>(2 * j + 1)])
      throw Error(ErrorCode::NotNormalizing, "conjugation breaks the (u, conj u) pairing");
  }
  const IntegerMatrix& r = t.relations.basis();
  for (std::size_t w = 0; w < r.rows(); ++w) {
    std::vector<long> sum(static_cast<std::size_t>(t.free_rank), 0);
    for (int j = 0; j < t.g; ++j)
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += r(w, static_cast<std::size_t>(j)).get_si() * conj[static_cast<std::size_t>(2 * j)][k];
    for (long x : sum)
      if (x != 0) throw Error(ErrorCode::NotNormalizing, "conjugated torus violates a Hodge relation");
  }
}

std::vector<MomentReport> coset_moments(const TorusEmbedding& t, const ComponentRep& rep, int max_n) {
  check_bound(max_n);
  check_normalizes(t, rep);
  std::vector<MomentReport> out;
  IntegerMatrix p = IntegerMatrix::identity(rep.matrix.rows());
  for (int k = 0; k < rep.order; ++k) {
    MomentReport r;
    r.field = "coset " + std::to_string(k);
    r.moments = moments_of(coset_trace_polynomial(t, p), max_n);
    out.push_back(std::move(r));
    p = p * rep.matrix;
  }
  return out;
}

MomentReport group_moments(const TorusEmbedding& t, const ComponentRep& rep, int max_n) {
  const auto cosets = coset_moments(t, rep, max_n);
  MomentReport r;
  r.field = "group";
  r.moments.assign(static_cast<std::size_t>(max_n) + 1, Rational(0));
  for (const auto& c : cosets)
    for (std::size_t n = 0; n < r.moments.size(); ++n) r.moments[n] += c.moments[n];
  for (auto& x : r.moments) {
    x /= rep.order;
    x.canonicalize();
  }
  IntegerMatrix p = rep.matrix;
  r.components = rep.order;
  for (int k = 1; k < rep.order; ++k, p = p * rep.matrix)
    if (diagonal_point_in_torus(t, p)) {
      r.components = k;
      break;
    }
  return r;
}

}  // namespace fermat
