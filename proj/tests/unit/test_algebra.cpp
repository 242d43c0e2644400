#include <gtest/gtest.h>

#include <random>

#include "fermat/algebra/arith.hpp"
#include "fermat/algebra/cyclotomic.hpp"
#include "fermat/algebra/lattice.hpp"
#include "fermat/algebra/laurent.hpp"
#include "fermat/algebra/normal_form.hpp"
#include "fermat/error.hpp"
#include "fermat/mt/projection.hpp"
#include "oracle.hpp"

using namespace fermat;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Low-rank matrices exercise the kernel paths.
IntegerMatrix random_low_rank(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, r, k, -3, 3) * random_matrix(rng, k, c, -3, 3);
}

}  // namespace

TEST(HermiteNormalForm, SmallExamples) {
  EXPECT_EQ(hermite_normal_form(IntegerMatrix{{2, 0}, {0, 3}}).H, (IntegerMatrix{{2, 0}, {0, 3}}));
  const auto h = hermite_normal_form(IntegerMatrix{{1, 1}, {1, 1}});
  EXPECT_EQ(h.H, (IntegerMatrix{{1, 1}, {0, 0}}));
  EXPECT_EQ(hermite_basis(IntegerMatrix{{1, 1}, {1, 1}}), (IntegerMatrix{{1, 1}}));
}

TEST(HermiteNormalForm, MatrixForFifteenHasRankManyRows) {
  const auto p = build_projection_matrix(15);
  const auto basis = hermite_basis(p.M);
  EXPECT_EQ(basis.rows(), oracle::rational_rank(p.M));
  EXPECT_EQ(basis.rows(), 5u);
}

TEST(HermiteNormalForm, UnimodularTransformAndSpanProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    const IntegerMatrix m = trial % 3 == 0 ? random_low_rank(rng, r, c, 1 + trial % 2) : random_matrix(rng, r, c, -9, 9);
    const auto h = hermite_normal_form(m);
    EXPECT_EQ(h.U * m, h.H);
    const Integer det = determinant(h.U);
    EXPECT_TRUE(det == 1 || det == -1);
    if (h.U.rows() <= 5) EXPECT_EQ(oracle::laplace_determinant(h.U), det);
    // same row span: each generator lies in the HNF lattice and conversely
    const Lattice a = Lattice::from_generators(m), b = Lattice::from_generators(h.H);
    EXPECT_EQ(a, b);
    for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_TRUE(b.contains(m.row(i)));
    EXPECT_EQ(hermite_basis(m).rows(), oracle::rational_rank(m));
    // canonical: pivots positive, entries above pivots reduced
    const auto piv = pivot_columns(a.basis());
    for (std::size_t i = 0; i < piv.size(); ++i) {
      const Integer& d = a.basis()(i, piv[i]);
      EXPECT_GT(d, 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(a.basis()(k, piv[i]), 0);
        EXPECT_LT(a.basis()(k, piv[i]), d);
      }
    }
  }
}

TEST(HermiteBasis, LargeEntriesFallBackToGmp) {
  IntegerMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  m(0, 1) = Integer("987654321098765432109876543210");
  m(1, 0) = Integer("3");
  m(1, 1) = Integer("7");
  const auto b = hermite_basis(m);
  EXPECT_EQ(b.rows(), 2u);
  EXPECT_EQ(abs(b(0, 0) * b(1, 1)), abs(determinant(m)));
}

TEST(SmithNormalForm, SmallExamples) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}}).D, (IntegerMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix::identity(3)).D, IntegerMatrix::identity(3));
  const IntegerMatrix m{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.D, (IntegerMatrix{{2, 0}, {0, 4}}));
  // d1 is the gcd of the entries and d1 d2 = |det|
  EXPECT_EQ(oracle::laplace_determinant(m), -8);
}

TEST(SmithNormalForm, DivisibilityAndTransforms) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    const IntegerMatrix m = trial % 4 == 0 ? random_low_rank(rng, r, c, 1) : random_matrix(rng, r, c, -12, 12);
    const auto s = smith_normal_form(m);
    EXPECT_EQ(s.S * m * s.T, s.D);
    EXPECT_TRUE(s.D.is_diagonal());
    const Integer ds = determinant(s.S), dt = determinant(s.T);
    EXPECT_TRUE(abs(ds) == 1 && abs(dt) == 1);
    const auto ed = elementary_divisors(m);
    EXPECT_EQ(ed.size(), oracle::rational_rank(m));
    for (std::size_t i = 0; i + 1 < ed.size(); ++i) EXPECT_EQ(ed[i + 1] % ed[i], 0);
    if (r == c) {
      Integer prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.D(i, i);
      EXPECT_EQ(abs(prod), abs(oracle::laplace_determinant(m)));
    }
  }
}

TEST(IntegerKernel, SmallExamples) {
  const auto k = integer_kernel(IntegerMatrix{{1, 1}});
  EXPECT_EQ(k, Lattice::from_generators(IntegerMatrix{{1, -1}}));
  EXPECT_EQ(integer_kernel(IntegerMatrix::identity(4)).rank(), 0u);
  EXPECT_EQ(integer_kernel(IntegerMatrix::identity(4)).ambient_rank(), 4u);
}

TEST(IntegerKernel, SaturatedAndAnnihilated) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 2 + trial % 6;
    const IntegerMatrix m = random_low_rank(rng, r, c, 1 + trial % 3);
    const Lattice k = integer_kernel(m);
    EXPECT_EQ(k.rank() + oracle::rational_rank(m), c);
    EXPECT_TRUE(k.is_saturated());
    EXPECT_EQ(saturate(k), k);
    EXPECT_TRUE((m * k.basis().transpose()).is_zero());
    // scaling a kernel vector keeps it in the kernel, and saturation brings back the original
    if (k.rank() > 0) {
      IntegerMatrix scaled = k.basis();
      for (std::size_t j = 0; j < c; ++j) scaled(0, j) *= 6;
      const Lattice sub = Lattice::from_generators(scaled);
      EXPECT_EQ(saturate(sub), k);
      EXPECT_EQ(sublattice_index(sub, k), Integer(6));
    }
  }
}

TEST(IntegerKernel, FifteenKernelPlusTopBlockHasIndexTwo) {
  const auto p = build_projection_matrix(15);
  const Lattice k = integer_kernel(p.M);
  std::vector<std::size_t> top(8);
  for (std::size_t i = 0; i < 8; ++i) top[i] = i;
  const Lattice span = lattice_sum(k, Lattice::coordinate(14, top));
  EXPECT_EQ(sublattice_index(span, Lattice::standard(14)), Integer(2));
}

TEST(SublatticeIndex, Examples) {
  EXPECT_EQ(sublattice_index(Lattice::from_generators(IntegerMatrix{{2, 0}, {0, 2}}), Lattice::standard(2)), Integer(4));
  const std::vector<std::size_t> first{0};
  EXPECT_FALSE(sublattice_index(Lattice::coordinate(2, first), Lattice::standard(2)).has_value());
  EXPECT_EQ(sublattice_index(Lattice::standard(3), Lattice::standard(3)), Integer(1));
}

TEST(SublatticeIndex, Errors) {
  const auto a = Lattice::from_generators(IntegerMatrix{{1, 0}});
  const auto b = Lattice::from_generators(IntegerMatrix{{2, 0}});
  try {
    sublattice_index(a, b);
    FAIL() << "expected NotSublattice";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSublattice);
  }
  try {
    sublattice_index(Lattice::standard(2), Lattice::standard(3));
    FAIL() << "expected AmbientMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbientMismatch);
  }
}

TEST(LatticeSum, Examples) {
  const auto l = Lattice::from_generators(IntegerMatrix{{3, 1, 0}, {0, 2, 5}});
  EXPECT_EQ(lattice_sum(l, Lattice(3)), l);
  EXPECT_EQ(lattice_sum(Lattice::from_generators(IntegerMatrix{{2, 0}}), Lattice::from_generators(IntegerMatrix{{0, 2}})),
            Lattice::from_generators(IntegerMatrix{{2, 0}, {0, 2}}));
  const auto s = lattice_sum(Lattice::from_generators(IntegerMatrix{{1, 1}}), Lattice::from_generators(IntegerMatrix{{1, -1}}));
  EXPECT_EQ(sublattice_index(s, Lattice::standard(2)), Integer(2));
  EXPECT_EQ(oracle::laplace_determinant(IntegerMatrix{{1, 1}, {1, -1}}), -2);
}

TEST(Cyclotomic, RootOfUnityRelations) {
  for (int m : {3, 5, 9, 15, 27}) {
    EXPECT_TRUE((CyclotomicElement::zeta(m, 1) * CyclotomicElement::zeta(m, m - 1)).is_one());
    EXPECT_TRUE(CyclotomicElement::zeta(m, m).is_one());
  }
  const auto one_plus = CyclotomicElement::integer(3, 1) + CyclotomicElement::zeta(3, 1);
  EXPECT_EQ(one_plus * CyclotomicElement::integer(3, 1), one_plus);
  // zeta_9^3 is a primitive cube root of unity: a root of x^2 + x + 1
  const auto z3 = CyclotomicElement::zeta(9, 3);
  EXPECT_TRUE((z3 * z3 + z3 + CyclotomicElement::integer(9, 1)).is_zero());
  EXPECT_FALSE(z3.is_one());
}

TEST(Cyclotomic, ArithmeticMatchesComplexEmbedding) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int m : {3, 5, 7, 9, 12, 15, 21}) {
    const int phi = static_cast<int>(arith::euler_phi(m));
    for (int trial = 0; trial < 20; ++trial) {
      IntVector ca(static_cast<std::size_t>(phi)), cb(static_cast<std::size_t>(phi));
      for (auto& c : ca) c = dist(rng);
      for (auto& c : cb) c = dist(rng);
      const CyclotomicElement a(m, ca), b(m, cb);
      for (long k : arith::units(m)) {
        const auto ea = oracle::embed(a, k), eb = oracle::embed(b, k);
        EXPECT_LT(std::abs(oracle::embed(a * b, k) - ea * eb), 1e-9L);
        EXPECT_LT(std::abs(oracle::embed(a + b, k) - (ea + eb)), 1e-9L);
        EXPECT_LT(std::abs(oracle::embed(a.galois(k), 1) - ea), 1e-9L);
        EXPECT_LT(std::abs(oracle::embed(a.conjugate(), k) - std::conj(ea)), 1e-9L);
        if (!a.is_zero()) {
          EXPECT_LT(std::abs(oracle::embed(a.inverse(), k) * ea - 1.0L), 1e-7L);
        }
      }
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        // norm equals the product of all embeddings
        std::complex<long double> prod = 1;
        for (long k : arith::units(m)) prod *= oracle::embed(a, k);
        const auto [num, den] = a.norm();
        EXPECT_NEAR(static_cast<double>(prod.real()), num.get_d() / den.get_d(), 1e-6 * std::max(1.0, std::abs(num.get_d())));
      }
    }
  }
}

TEST(Cyclotomic, AsRootOfUnity) {
  for (int m : {9, 15}) {
    for (long k = 0; k < m; ++k) {
      const auto r = CyclotomicElement::zeta(m, k).as_root_of_unity();
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r, (std::pair<int, long>{1, k}));
    }
    const auto two = CyclotomicElement::integer(m, 2);
    EXPECT_FALSE(two.as_root_of_unity().has_value());
  }
  EXPECT_EQ((-CyclotomicElement::zeta(9, 2)).as_root_of_unity(), (std::pair<int, long>{-1, 2}));
}

TEST(Cyclotomic, InverseOfZeroThrows) {
  try {
    (void)CyclotomicElement::zero(9).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Laurent, ConstantTermOfPowers) {
  LaurentPolynomial f(1);
  f.add_term({1}, 1);
  f.add_term({-1}, 1);
  EXPECT_EQ(constant_term_power(f, 0), 1);
  EXPECT_EQ(constant_term_power(f, 2), 2);
  EXPECT_EQ(constant_term_power(f, 4), 6);
  EXPECT_EQ(constant_term_power(f, 6), 20);
  EXPECT_EQ(constant_term_power(f, 5), 0);
}

TEST(Laurent, SplitPowerMatchesNaivePower) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t vars = 1 + trial % 3;
    LaurentPolynomial f(vars);
    for (int t = 0; t < 5; ++t) {
      LaurentPolynomial::Exponent ex(vars);
      for (auto& x : ex) x = e(rng);
      f.add_term(ex, c(rng));
    }
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(constant_term_power(f, n), f.pow(n).constant_term()) << f.to_string();
  }
}

TEST(Arith, SmallHelpers) {
  EXPECT_EQ(arith::euler_phi(27), 18);
  EXPECT_EQ(arith::prime_power(2197), (std::pair<std::uint64_t, int>{13, 3}));
  EXPECT_EQ(arith::prime_power(15), (std::pair<std::uint64_t, int>{0, 0}));
  EXPECT_EQ(arith::smallest_primitive_root(19), 2u);
  const auto primes = arith::primes_in_range(90, 120);
  EXPECT_EQ(primes, (std::vector<std::uint64_t>{97, 101, 103, 107, 109, 113}));
  EXPECT_EQ(arith::multiplicative_order(2, 9), 6);
}
