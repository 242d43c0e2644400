#include <gtest/gtest.h>

#include <cmath>

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"
#include "fermat/frobenius/finite_field.hpp"
#include "fermat/frobenius/frobenius_polynomial.hpp"
#include "fermat/frobenius/jacobi.hpp"
#include "fermat/frobenius/point_count.hpp"
#include "fermat/frobenius/stickelberger.hpp"
#include "fermat/frobenius/sweep.hpp"
#include "fermat/frobenius/torsion.hpp"
#include "oracle.hpp"

using namespace fermat;

namespace {

bool good(int m, std::uint64_t p) { return p > 2 && m % static_cast<int>(p) != 0; }

std::vector<std::uint64_t> split_primes(int m, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; out.size() < count; p += 2)
    if (arith::is_prime(p) && (p - 1) % static_cast<std::uint64_t>(m) == 0) out.push_back(p);
  return out;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

}  // namespace

TEST(FiniteField, SmallExtensions) {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 3}, {7, 2}, {2, 4}}) {
    FiniteField f(p, k);
    EXPECT_TRUE(is_irreducible_mod_p(f.modulus(), p));
    const auto g = f.primitive_element();
    // g generates: its order is exactly q - 1
    std::uint64_t order = 1;
    auto x = g;
    while (x != f.one()) {
      x = f.mul(x, g);
      ++order;
    }
    EXPECT_EQ(order, f.order() - 1);
    const auto chi = quadratic_character_table(f);
    long sum = 0;
    for (auto c : chi) sum += c;
    if (p != 2) EXPECT_EQ(sum, 0);
  }
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1}, 5));  // x^2 + 1 = (x - 2)(x + 2)
  EXPECT_TRUE(is_irreducible_mod_p({1, 0, 1}, 7));
}

TEST(PointCount, Examples) {
  EXPECT_EQ(point_count_trace(3, 5), 0);
  EXPECT_EQ(point_count_trace(3, 7), 4);
  EXPECT_EQ(oracle::brute_trace_fp(3, 7), 4);
  EXPECT_EQ(point_count_trace(9, 19), oracle::brute_trace_fp(9, 19));
  EXPECT_EQ(point_count_trace(9, 19), -8);
}

TEST(PointCount, Errors) {
  EXPECT_EQ(code_of([] { point_count_trace(9, 3); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { point_count_trace(9, 4); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { point_count_trace(9, 15); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { point_count_trace(3, 1009, 1000); }), ErrorCode::BoundExceeded);
}

// Jacobi-sum traces against direct enumeration, over F_p and F_{p^2}.
TEST(OracleEquivalence, JacobiTracesMatchPointCounts) {
  int compared = 0;
  for (int m : {3, 5, 9, 15}) {
    for (std::uint64_t p = 3; p < 50; p += 2) {
      if (!arith::is_prime(p) || !good(m, p)) continue;
      const long t1 = oracle::brute_trace_fp(m, p);
      const long t2 = oracle::brute_trace_fp2(m, p);
      EXPECT_EQ(frobenius_trace(m, p, 1), t1) << m << " " << p;
      EXPECT_EQ(frobenius_trace(m, p, 2), t2) << m << " " << p;
      EXPECT_EQ(point_count_trace(m, p), t1) << m << " " << p;
      EXPECT_EQ(point_count_trace(m, p * p), t2) << m << " " << p;
      EXPECT_EQ(fast_trace(m, p), t1) << m << " " << p;
      compared += 2;
    }
  }
  EXPECT_GT(compared, 90);
}

TEST(Jacobi, NormIsP) {
  for (int m : {3, 5, 9, 15, 21}) {
    for (auto p : split_primes(m, 3)) {
      for (const auto& j : jacobi_sums(m, p)) {
        const auto n = j.value * j.value.conjugate();
        EXPECT_EQ(n, CyclotomicElement::integer(m, static_cast<long>(p))) << m << " " << p << " a=" << j.a;
        EXPECT_NEAR(static_cast<double>(std::abs(oracle::embed(j.value))), std::sqrt(static_cast<double>(p)), 1e-9);
      }
    }
  }
}

TEST(Jacobi, TraceIdentity) {
  // m = 3, p = 7: the two sums are conjugate and their sum is rational
  const auto sums = jacobi_sums(3, 7);
  ASSERT_EQ(sums.size(), 2u);
  const auto total = sums[0].value + sums[1].value;
  EXPECT_EQ(total, sums[1].value + sums[0].value.conjugate().conjugate());
  EXPECT_EQ(total.coeffs()[1], 0);
  EXPECT_EQ(abs(total.coeffs()[0]), 4);
  for (int m : {3, 9}) {
    for (auto p : split_primes(m, 4)) {
      CyclotomicElement s = CyclotomicElement::zero(m);
      for (const auto& r : frobenius_roots(m, p)) s = s + r;
      EXPECT_EQ(s, CyclotomicElement::integer(m, oracle::brute_trace_fp(m, p))) << m << " " << p;
    }
  }
}

TEST(Jacobi, Errors) {
  EXPECT_EQ(code_of([] { jacobi_sum(9, 23, 1); }), ErrorCode::CongruenceViolation);
  EXPECT_EQ(code_of([] { jacobi_sum(9, 19, 9); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { jacobi_sum(9, 21, 1); }), ErrorCode::InvalidModulus);
  const auto table = character_sum_table(9, 7, 1);
  EXPECT_EQ(code_of([&] { jacobi_from_table(table, 1); }), ErrorCode::CongruenceViolation);
}

TEST(FrobeniusPolynomial, NewtonIdentitiesFromPointCounts) {
  struct Case {
    int m;
    std::uint64_t p;
  };
  for (auto [m, p] : std::vector<Case>{{9, 19}, {5, 11}, {7, 29}, {9, 7}, {15, 7}}) {
    const int g = (m - 1) / 2;
    std::vector<long> s;
    std::uint64_t q = 1;
    for (int k = 1; k <= g; ++k) {
      q *= p;
      s.push_back(point_count_trace(m, q, 1'000'000));
    }
    const auto data = frobenius_polynomial(m, p);
    ASSERT_TRUE(data.polynomial.has_value());
    EXPECT_EQ(*data.polynomial, oracle::weil_polynomial_from_traces(p, g, s)) << m << " " << p;
    EXPECT_TRUE(satisfies_functional_equation(data));
  }
}

TEST(FrobeniusPolynomial, FactorDegreesAtSplitPrimes) {
  const std::vector<std::pair<int, std::vector<int>>> cases{
      {9, {6, 2}}, {15, {8, 4, 2}}, {21, {12, 6, 2}}, {27, {18, 6, 2}}};
  for (const auto& [m, degrees] : cases) {
    for (auto p : split_primes(m, 5)) {
      const auto data = frobenius_polynomial(m, p);
      EXPECT_EQ(factor_degrees(data), degrees) << m << " " << p;
      for (const auto& f : data.factors) {
        ASSERT_TRUE(f.irreducible.has_value());
        EXPECT_TRUE(*f.irreducible) << m << " " << p << " d=" << f.d;
      }
      EXPECT_TRUE(satisfies_functional_equation(data));
    }
  }
}

TEST(FrobeniusPolynomial, LongOrbitsAreRefused) {
  // 5 has order 6 mod 9
  EXPECT_EQ(code_of([] { frobenius_polynomial(9, 5); }), ErrorCode::BoundExceeded);
  // but its trace only needs the orbits of length one
  EXPECT_EQ(frobenius_trace(9, 5, 1), oracle::brute_trace_fp(9, 5));
  EXPECT_EQ(code_of([] { frobenius_polynomial(9, 3); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { frobenius_roots(9, 23); }), ErrorCode::NotSplit);
}

TEST(FrobeniusPolynomial, OrbitsPartitionCharacters) {
  for (auto [m, p] : std::vector<std::pair<int, std::uint64_t>>{{15, 7}, {9, 5}, {21, 13}}) {
    std::vector<int> seen(static_cast<std::size_t>(m), 0);
    for (const auto& o : frobenius_orbits(m, p)) {
      EXPECT_EQ(static_cast<long>(o.size()), arith::multiplicative_order(static_cast<long>(p % static_cast<std::uint64_t>(m / oracle::gcd(o[0], m))), m / oracle::gcd(o[0], m)));
      for (int a : o) ++seen[static_cast<std::size_t>(a)];
    }
    for (int a = 1; a < m; ++a) EXPECT_EQ(seen[static_cast<std::size_t>(a)], 1);
  }
}

TEST(WeilBound, AllComputedTraces) {
  for (int m : {9, 15, 21}) {
    const double g = (m - 1) / 2.0;
    const auto traces = sweep_traces(m, 0, 20'000);
    for (const auto& e : traces) EXPECT_LE(std::abs(static_cast<double>(e.t)), 2 * g * std::sqrt(static_cast<double>(e.p))) << m << " " << e.p;
    for (std::size_t i = 0; i < traces.size(); i += 97) EXPECT_EQ(traces[i].t, frobenius_trace(m, traces[i].p)) << m << " " << traces[i].p;
  }
}

TEST(Stickelberger, HnfValuationsMatchFractionalFormula) {
  for (auto [m, p] : std::vector<std::pair<int, std::uint64_t>>{{9, 19}, {15, 31}, {7, 29}, {21, 43}}) {
    const auto sums = jacobi_sums(m, p);
    const auto v = stickelberger_valuations(sums);
    const auto units = arith::units(m);
    ASSERT_EQ(v.rows(), units.size());
    ASSERT_EQ(v.cols(), sums.size());
    for (std::size_t i = 0; i < units.size(); ++i)
      for (std::size_t j = 0; j < sums.size(); ++j)
        EXPECT_EQ(v(i, j), oracle::stickelberger_fraction(m, units[i], sums[j].a)) << m << " t=" << units[i] << " a=" << sums[j].a;
  }
}

TEST(Stickelberger, ConjugateSymmetryAndColumnSums) {
  const int m = 15;
  const std::uint64_t p = 61;
  const auto sums = jacobi_sums(m, p);
  const auto v = stickelberger_valuations(sums);
  const auto units = arith::units(m);
  for (std::size_t j = 0; j < sums.size(); ++j) {
    Integer col = 0;
    for (std::size_t i = 0; i < units.size(); ++i) {
      col += v(i, j);
      const auto k = std::find(units.begin(), units.end(), m - units[i]) - units.begin();
      EXPECT_EQ(v(i, j) + v(static_cast<std::size_t>(k), j), 1);
    }
    EXPECT_EQ(col, arith::euler_phi(m) / 2);
  }
}

TEST(Stickelberger, PrimesAboveAndIdealPowers) {
  const auto primes = primes_above(9, 19);
  ASSERT_EQ(primes.size(), 6u);
  for (const auto& pr : primes) EXPECT_EQ(oracle::pw(pr.w, 9, 19), 1u);
  const auto z = CyclotomicElement::zeta(9, 1);
  const auto w = static_cast<long>(primes[0].w);
  const auto pi = z - CyclotomicElement::integer(9, w);
  EXPECT_EQ(ideal_valuation(pi, 19, primes[0].w), 1);
  EXPECT_EQ(ideal_valuation(pi * pi * pi, 19, primes[0].w), 3);
  EXPECT_EQ(ideal_valuation(CyclotomicElement::integer(9, 19), 19, primes[0].w), 1);
  EXPECT_EQ(ideal_valuation(CyclotomicElement::integer(9, 2), 19, primes[0].w), 0);
  const auto basis = ideal_power_basis(9, 19, primes[0].w, 2);
  EXPECT_EQ(abs(determinant(basis)), 19 * 19);
  EXPECT_EQ(code_of([] { primes_above(9, 23); }), ErrorCode::NotSplit);
}

TEST(TorsionFree, NineIsAlwaysTorsionFree) {
  for (auto p : split_primes(9, 8)) {
    const auto r = torsion_free_test(9, p);
    EXPECT_TRUE(r.torsion_free) << p;
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(TorsionFree, FifteenWitnessReevaluates) {
  int with_torsion = 0;
  for (auto p : split_primes(15, 12)) {
    const auto r = torsion_free_test(15, p);
    if (r.torsion_free) continue;
    ++with_torsion;
    ASSERT_TRUE(r.witness.has_value());
    ASSERT_TRUE(r.witness_root.has_value());
    const auto roots = frobenius_roots(15, p);
    const auto& e = *r.witness;
    ASSERT_EQ(e.size(), roots.size());
    // direct product with field inverses
    CyclotomicElement direct = CyclotomicElement::integer(15, 1);
    for (std::size_t i = 0; i < e.size(); ++i) direct = direct * roots[i].pow(e[i]);
    const auto root = direct.as_root_of_unity();
    ASSERT_TRUE(root.has_value()) << p;
    EXPECT_FALSE(direct.is_one());
    EXPECT_EQ(evaluate_relation(roots, e, p), direct);
    EXPECT_EQ(*root, *r.witness_root);
  }
  EXPECT_GT(with_torsion, 0);
  EXPECT_EQ(code_of([] { torsion_free_test(15, 17); }), ErrorCode::NotSplit);
}

TEST(Sweep, DeterministicAcrossPartitions) {
  const auto a = sweep_traces(15, 0, 30'000, SweepOptions{1 << 16, 1});
  const auto b = sweep_traces(15, 0, 30'000, SweepOptions{1000, 4});
  EXPECT_EQ(a, b);
  const auto half = sweep_traces(15, 0, 15'000);
  const auto c = sweep_traces(15, 0, 30'000, {}, half);
  EXPECT_EQ(a, c);
  const auto na = numerical_moments(15, 30'000, Selector::All, a, 6, SweepOptions{1 << 16, 1});
  const auto nb = numerical_moments(15, 30'000, Selector::All, a, 6, SweepOptions{1 << 16, 3});
  EXPECT_EQ(na.power_sums, nb.power_sums);
  EXPECT_EQ(na.moments, nb.moments);
}

TEST(Sweep, SkipsBadPrimes) {
  const auto t = sweep_traces(15, 0, 100);
  for (const auto& e : t) EXPECT_TRUE(e.p != 2 && e.p != 3 && e.p != 5);
  EXPECT_EQ(t.front().p, 7u);
}

TEST(NumericalMoments, ExactPowerSumsAndSelectors) {
  const auto traces = sweep_traces(9, 0, 5000);
  const auto all = numerical_moments(9, 5000, Selector::All, traces, 4);
  const auto cong = numerical_moments(9, 5000, Selector::Congruent1ModM, traces, 4);
  Integer s2 = 0;
  std::uint64_t n = 0, ncong = 0;
  for (const auto& e : traces) {
    s2 += Integer(e.t) * e.t;
    ++n;
    if (e.p % 9 == 1) ++ncong;
  }
  EXPECT_EQ(all.primes, n);
  EXPECT_EQ(cong.primes, ncong);
  EXPECT_EQ(all.power_sums[2], s2);
  EXPECT_EQ(all.power_sums[0], Integer(static_cast<long>(n)));
  // torsion-free selector keeps every p = 1 mod 9
  const auto tf = numerical_moments(9, 5000, Selector::TorsionFree, traces, 4);
  EXPECT_EQ(tf.primes, ncong);
  EXPECT_EQ(tf.power_sums, cong.power_sums);
}

TEST(NumericalMoments, Errors) {
  const auto traces = sweep_traces(9, 0, 1000);
  EXPECT_EQ(code_of([&] { numerical_moments(9, 2000, Selector::All, traces, 4); }), ErrorCode::BoundExceeded);
  EXPECT_EQ(code_of([&] { numerical_moments(9, 1000, Selector::All, traces, 13); }), ErrorCode::BoundExceeded);
  EXPECT_EQ(code_of([] { numerical_moments(9, max_sweep_bound + 1, Selector::All, 4); }), ErrorCode::BoundExceeded);
  EXPECT_EQ(code_of([] { sweep_traces(10, 0, 100); }), ErrorCode::InvalidModulus);
}

TEST(Selector, Names) {
  for (auto s : {Selector::All, Selector::Congruent1ModM, Selector::TorsionFree}) EXPECT_EQ(parse_selector(to_string(s)), s);
  EXPECT_FALSE(parse_selector("split").has_value());
}

TEST(SplitDensity, FifteenSmallBound) {
  const auto d = split_density(15, 2000);
  std::size_t expected = 0;
  for (std::uint64_t p = 31; p < 2000; p += 30) expected += arith::is_prime(p);
  EXPECT_EQ(d.results.size(), expected);
  for (const auto& r : d.results) EXPECT_EQ(r.torsion_free, torsion_free_test(15, r.p).torsion_free);
  EXPECT_GT(d.torsion_free(), 0u);
  EXPECT_LT(d.torsion_free(), d.results.size());
}

// Scaled-down comparison with the moments over the connectedness field of J_15,
// using torsion-free primes as the stand-in for primes split in that field.
TEST(NumericalMoments, FifteenTorsionFreeAtTwoToTheTwenty) {
  constexpr double tolerance = 0.03;
  const auto r = numerical_moments(15, 1ULL << 20, Selector::TorsionFree, 4);
  const double m2 = static_cast<double>(r.moments[2]);
  const double m4 = static_cast<double>(r.moments[4]);
  EXPECT_NEAR(m2, 14.0, tolerance * 14.0) << r.primes << " primes";
  EXPECT_NEAR(m4, 834.0, tolerance * 834.0) << r.primes << " primes";
}
