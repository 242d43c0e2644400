#include <gtest/gtest.h>

#include "fermat/error.hpp"
#include "fermat/hodge/torus.hpp"
#include "fermat/st/moments.hpp"
#include "oracle.hpp"

using namespace fermat;

namespace {

std::vector<Rational> even(const MomentReport& r) {
  std::vector<Rational> out;
  for (std::size_t n = 2; n < r.moments.size(); n += 2) out.push_back(r.moments[n]);
  return out;
}

std::vector<Rational> q(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.emplace_back(v);
  return out;
}

LaurentPolynomial poly(std::size_t vars, const std::vector<std::pair<LaurentPolynomial::Exponent, long>>& terms) {
  LaurentPolynomial p(vars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

// Swaps the (u, conj u) pairs i and j.
IntegerMatrix swap_pairs(int g, int i, int j) {
  IntegerMatrix m = IntegerMatrix::identity(2 * static_cast<std::size_t>(g));
  for (int k = 0; k < 2; ++k) {
    m.swap_rows(static_cast<std::size_t>(2 * i + k), static_cast<std::size_t>(2 * j + k));
  }
  return m;
}

}  // namespace

TEST(IdentityMoments, CircleGroup) {
  TorusEmbedding t = torus_from_relations(Lattice(1));
  EXPECT_EQ(identity_trace_polynomial(t), poly(1, {{{1}, 1}, {{-1}, 1}}));
  const auto r = identity_moments(t, 6);
  EXPECT_EQ(r.moments, q({"1", "0", "2", "0", "6", "0", "20"}));
}

TEST(IdentityMoments, PrintedTables) {
  EXPECT_EQ(even(identity_moments(sato_tate_torus(9), 10)), q({"8", "216", "8000", "343000", "16003008"}));
  EXPECT_EQ(even(identity_moments(sato_tate_torus(18), 12)),
            q({"32", "3456", "512000", "87808000", "16387080192", "3231289442304"}));
  EXPECT_EQ(even(identity_moments(sato_tate_torus(15), 6)), q({"14", "834", "78260"}));
}

TEST(IdentityMoments, TracePolynomials) {
  const auto p9 = identity_trace_polynomial(sato_tate_torus(9));
  EXPECT_EQ(p9, poly(3, {{{1, 0, 0}, 1},
                         {{-1, 0, 0}, 1},
                         {{0, 1, 0}, 1},
                         {{0, -1, 0}, 1},
                         {{0, 0, 1}, 1},
                         {{0, 0, -1}, 1},
                         {{-1, 1, 1}, 1},
                         {{1, -1, -1}, 1}}));
  const auto p18 = identity_trace_polynomial(sato_tate_torus(18));
  ASSERT_EQ(p18.terms().size(), p9.terms().size());
  for (const auto& [e, c] : p9.terms()) EXPECT_EQ(p18.coefficient(e), 2 * c);
}

TEST(IdentityMoments, WalkCountOracle) {
  for (int m : {9, 15, 21, 27}) {
    const auto t = sato_tate_torus(m);
    const int max_n = m >= 21 ? 6 : 8;
    const auto walks = oracle::torus_moments_dp(t.parametrization, max_n);
    const auto r = identity_moments(t, max_n);
    for (int n = 0; n <= max_n; ++n) EXPECT_EQ(r.moments[static_cast<std::size_t>(n)], Rational(walks[static_cast<std::size_t>(n)])) << m << " n=" << n;
  }
}

TEST(IdentityMoments, OddMomentsVanishAndSecondIsTwiceGenus) {
  for (int m : {9, 15, 21, 25, 27, 33}) {
    const auto r = identity_moments(sato_tate_torus(m), 7);
    for (std::size_t n = 1; n < r.moments.size(); n += 2) EXPECT_EQ(r.moments[n], 0) << m;
    EXPECT_EQ(r.moments[2], (m - 1)) << m;
  }
}

TEST(IdentityMoments, IndependentOfParametrizationBasis) {
  const auto t = sato_tate_torus(15);
  const IntegerMatrix change{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}};
  TorusEmbedding other = t;
  other.parametrization = t.parametrization * change;
  other.free_coordinates.clear();
  EXPECT_EQ(relation_lattice(other.parametrization), t.relations);
  EXPECT_EQ(identity_moments(other, 8).moments, identity_moments(t, 8).moments);
}

TEST(IdentityMoments, BoundExceeded) {
  try {
    identity_moments(sato_tate_torus(9), 13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
}

TEST(GroupMoments, NineWithGamma) {
  const auto t = sato_tate_torus(9);
  const auto gamma = gamma_j9();
  // gamma^6 = -1 lies in the torus, so the matrix order is twice the component count
  EXPECT_EQ(gamma.order, 12);
  const auto group = group_moments(t, gamma, 12);
  EXPECT_EQ(group.components, 6);
  EXPECT_EQ(even(group), q({"2", "38", "1340", "57190", "2667252", "131481812"}));
  const auto cosets = coset_moments(t, gamma, 2);
  ASSERT_EQ(cosets.size(), 12u);
  Rational total = 0;
  for (const auto& c : cosets) total += c.moments[2];
  EXPECT_EQ(total, 24);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(cosets[k].moments, cosets[k + 6].moments) << k;
  EXPECT_EQ(cosets[0].moments, identity_moments(t, 2).moments);
}

TEST(GroupMoments, IdentityRepresentative) {
  const auto t = sato_tate_torus(9);
  const auto id = ComponentRep::identity(4);
  EXPECT_EQ(group_moments(t, id, 8).moments, identity_moments(t, 8).moments);
  EXPECT_EQ(group_moments(t, id, 8).components, 1);
}

TEST(GroupMoments, ZeroTraceCosetHasZeroMoments) {
  const auto t = sato_tate_torus(9);
  const auto gamma = gamma_j9();
  int zero_cosets = 0;
  for (int k = 1; k < 6; ++k) {
    IntegerMatrix gk = IntegerMatrix::identity(8);
    for (int i = 0; i < k; ++i) gk = gk * gamma.matrix;
    const auto c = coset_moments(t, gamma, 4)[static_cast<std::size_t>(k)];
    if (coset_trace_polynomial(t, gk).is_zero()) {
      ++zero_cosets;
      for (std::size_t n = 1; n < c.moments.size(); ++n) EXPECT_EQ(c.moments[n], 0) << k;
    }
  }
  EXPECT_GT(zero_cosets, 0);
}

TEST(GroupMoments, NonNormalizingRepresentativeRejected) {
  const auto t = sato_tate_torus(9);
  const auto rep = ComponentRep::from_matrix(swap_pairs(4, 0, 1));
  try {
    check_normalizes(t, rep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalizing);
  }
  EXPECT_THROW(group_moments(t, rep, 4), Error);
  // swapping u2 and u3 keeps u4 = conj(u1) u2 u3
  EXPECT_NO_THROW(check_normalizes(t, ComponentRep::from_matrix(swap_pairs(4, 1, 2))));
}

TEST(ComponentRep, Validation) {
  EXPECT_THROW(ComponentRep::from_matrix(IntegerMatrix{{1, 1}, {0, 1}}), Error);
  EXPECT_THROW(ComponentRep::from_matrix(IntegerMatrix{{2, 0}, {0, 1}}), Error);
  // swapping u and conj u inside one pair is not symplectic
  EXPECT_THROW(ComponentRep::from_matrix(IntegerMatrix{{0, 1}, {1, 0}}), Error);
  const auto j = ComponentRep::from_matrix(IntegerMatrix{{0, 1}, {-1, 0}});
  EXPECT_EQ(j.order, 4);
}
