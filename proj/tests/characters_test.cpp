#include "primroot/characters.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

namespace primroot {
namespace {

constexpr double kTight = 1e-12;

CharacterFamily family(std::int64_t p, std::int64_t g) { return CharacterFamily(PrimitiveRoot(OddPrime(p), g)); }
CharacterFamily family(std::int64_t p) { return CharacterFamily(find_primitive_root(OddPrime(p))); }

void expect_near(Complex actual, Complex expected, double tol) {
  EXPECT_NEAR(actual.real(), expected.real(), tol);
  EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

TEST(MultChar, Examples) {
  const auto f = family(5, 2);
  expect_near(f[1](2), {0, 1}, kTight);
  expect_near(f[2](4), {1, 0}, kTight);
  expect_near(f[1](0), {0, 0}, 0.0);
  expect_near(f[1](5), {0, 0}, 0.0);
  expect_near(f[1](7), f[1](2), 0.0);  // reduced mod p
  EXPECT_THROW(f[4], std::out_of_range);
  EXPECT_THROW(f[-1], std::out_of_range);
}

TEST(MultChar, AgreesWithBruteForceOracle) {
  for (auto p : {3, 5, 7, 11, 13, 31}) {
    const auto f = family(p);
    for (std::int64_t k = 0; k < p - 1; ++k) {
      for (std::int64_t x = 0; x < p; ++x) {
        expect_near(f[k](x), oracle::chi(p, f.root().value(), k, x), 1e-12);
      }
    }
  }
}

TEST(MultChar, CompletelyMultiplicative) {
  for (auto p : oracle::odd_primes_upto(60)) {
    const auto f = family(p);
    for (std::int64_t k = 0; k < p - 1; ++k) {
      for (std::int64_t x = 1; x < p; ++x) {
        for (std::int64_t y = 1; y < p; ++y) {
          expect_near(f[k](x) * f[k](y), f[k](x * y % p), kTight);
        }
      }
    }
  }
}

TEST(MultChar, Orthogonality) {
  for (auto p : oracle::odd_primes_upto(200)) {
    const auto f = family(p);
    for (std::int64_t k = 1; k < p - 1; ++k) {
      Complex s{};
      for (std::int64_t x = 1; x < p; ++x) s += f[k](x);
      EXPECT_LT(std::abs(s), 1e-9) << "p=" << p << " k=" << k;
    }
  }
}

TEST(MultChar, ValueAtMinusOneIsParity) {
  for (auto p : oracle::odd_primes_upto(200)) {
    const auto f = family(p);
    for (std::int64_t k = 0; k < p - 1; ++k) {
      const double expected = k % 2 == 0 ? 1.0 : -1.0;
      expect_near(f[k](-1), {expected, 0.0}, kTight);
      EXPECT_EQ(f[k].value_at_minus_one(), static_cast<int>(expected));
    }
  }
}

TEST(MultChar, QuadraticIsLegendre) {
  for (auto p : oracle::odd_primes_upto(100)) {
    const auto rho = family(p).quadratic();
    for (std::int64_t x = 1; x < p; ++x) {
      bool square = false;
      for (std::int64_t y = 1; y < p; ++y) square = square || (y * y % p == x);
      expect_near(rho(x), {square ? 1.0 : -1.0, 0.0}, kTight);
    }
  }
}

TEST(MultChar, ProductRequiresSameFamily) {
  const auto a = family(7, 3);
  const auto b = family(7, 5);
  EXPECT_THROW(a[1] * b[1], std::invalid_argument);
  EXPECT_THROW(jacobi_sum(a[1], b[1]), std::invalid_argument);
  EXPECT_THROW(check_jacobi_gauss(a[1], family(11)[1]), std::invalid_argument);
  EXPECT_EQ((a[4] * a[5]).index(), 3);
  EXPECT_EQ(a[2].conjugate().index(), 4);
  EXPECT_EQ(a[0].conjugate().index(), 0);
}

TEST(AdditiveChar, Examples) {
  const OddPrime p(5);
  expect_near(additive_char(p, 0), {1, 0}, kTight);
  expect_near(additive_char(p, 5), {1, 0}, kTight);
  expect_near(additive_char(p, -1), additive_char(p, 4), kTight);
  Complex s{};
  for (std::int64_t t = 0; t < 5; ++t) s += additive_char(p, t);
  EXPECT_LT(std::abs(s), kTight);
}

TEST(GaussSum, Examples) {
  const auto f = family(5, 2);
  expect_near(gauss_sum(f[0]), {-1, 0}, 1e-12);
  EXPECT_NEAR(std::abs(gauss_sum(f[1])), std::sqrt(5.0), 1e-12);
  const auto g2 = oracle::gauss(5, 2, 2);
  expect_near(gauss_sum(f[2]), g2, 1e-12);
  EXPECT_NEAR(g2.real(), 2.2360680, 1e-7);
  EXPECT_NEAR(g2.imag(), 0.0, 1e-12);
}

TEST(GaussSum, MatchesOracleAndMagnitude) {
  for (auto p : oracle::odd_primes_upto(73)) {
    const auto f = family(p);
    for (std::int64_t k = 0; k < p - 1; ++k) {
      const auto g = gauss_sum(f[k]);
      expect_near(g, oracle::gauss(p, f.root().value(), k), 1e-9);
      if (k != 0) {
        EXPECT_NEAR(std::norm(g) / static_cast<double>(p), 1.0, 1e-6);
        EXPECT_EQ(check_gauss_magnitude(f[k]).verdict, Verdict::kMatch);
      }
    }
    EXPECT_EQ(check_gauss_magnitude(f[0]).verdict, Verdict::kNotApplicable);
  }
}

TEST(JacobiSum, Examples) {
  const auto f = family(5, 2);
  expect_near(jacobi_sum(f[1], f[2]), {1, 2}, 1e-12);
  expect_near(oracle::jacobi(5, 2, 1, 2), {1, 2}, 1e-12);
  expect_near(jacobi_sum(f[0], f[0]), {3, 0}, 1e-12);
  const auto f7 = family(7);
  EXPECT_NEAR(std::abs(jacobi_sum(f7[1], f7[2])), std::sqrt(7.0), 1e-9);
}

TEST(JacobiSum, MatchesOracle) {
  for (auto p : {7, 11, 13}) {
    const auto f = family(p);
    for (std::int64_t a = 0; a < p - 1; ++a) {
      for (std::int64_t b = 0; b < p - 1; ++b) {
        expect_near(jacobi_sum(f[a], f[b]), oracle::jacobi(p, f.root().value(), a, b), 1e-10);
      }
    }
  }
}

TEST(FirstMoment, Examples) {
  const auto f = family(5, 2);
  expect_near(first_moment(f[0]), {10, 0}, 1e-12);
  EXPECT_LT(std::abs(first_moment(f[2])), zero_tolerance(OddPrime(5)));
  expect_near(first_moment(f[1]), {-3, -1}, 1e-12);
  expect_near(oracle::moment(5, 2, 1), {-3, -1}, 1e-12);
  expect_near(first_moment(f[3]), {-3, 1}, 1e-12);
}

TEST(FirstMoment, ConjugateSymmetry) {
  for (auto p : oracle::odd_primes_upto(200)) {
    const auto f = family(p);
    for (std::int64_t k = 1; k < p - 1; ++k) {
      expect_near(first_moment(f[p - 1 - k]), std::conj(first_moment(f[k])), 1e-9);
    }
  }
}

TEST(ParityIdentity, Examples) {
  const auto f = family(5, 2);
  auto r = check_parity_identity(f[0]);
  expect_near(r.lhs, {20, 0}, 1e-12);
  expect_near(r.rhs, {20, 0}, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::kMatch);
  r = check_parity_identity(f[2]);
  EXPECT_EQ(r.verdict, Verdict::kMatch);
  EXPECT_LT(std::abs(r.lhs), 1e-12);
  r = check_parity_identity(f[1]);
  EXPECT_EQ(r.verdict, Verdict::kMatch);
  expect_near(r.lhs, {0, 0}, 0.0);
}

TEST(ParityIdentity, HoldsForAllPrimesUpTo200) {
  for (auto p : oracle::odd_primes_upto(200)) {
    const auto f = family(p);
    for (std::int64_t k = 0; k < p - 1; ++k) {
      EXPECT_EQ(check_parity_identity(f[k]).verdict, Verdict::kMatch) << p << " " << k;
    }
  }
}

TEST(JacobiGauss, Examples) {
  const auto f = family(5, 2);
  auto r = check_jacobi_gauss(f[1], f[2]);
  EXPECT_EQ(r.verdict, Verdict::kMatch);
  EXPECT_LT(r.abs_residual, 1e-9);
  EXPECT_EQ(r.k2, 2);
  r = check_jacobi_gauss(f[1], f[3]);
  EXPECT_EQ(r.verdict, Verdict::kNotApplicable);
  EXPECT_EQ(check_jacobi_gauss(f[0], f[2]).verdict, Verdict::kNotApplicable);
  const auto f7 = family(7);
  r = check_jacobi_gauss(f7[2], f7[3]);
  EXPECT_EQ(r.verdict, Verdict::kMatch);
  EXPECT_LT(r.abs_residual, 1e-9);
}

TEST(JacobiGauss, HoldsForAllApplicablePairsUpTo50) {
  for (auto p : oracle::odd_primes_upto(50)) {
    const auto f = family(p);
    for (std::int64_t a = 0; a < p - 1; ++a) {
      for (std::int64_t b = 0; b < p - 1; ++b) {
        const auto r = check_jacobi_gauss(f[a], f[b]);
        const bool applicable = a != 0 && b != 0 && (a + b) % (p - 1) != 0;
        EXPECT_EQ(r.verdict, applicable ? Verdict::kMatch : Verdict::kNotApplicable)
            << p << " " << a << " " << b;
      }
    }
  }
}

TEST(LemmaAudit, ReportsDiscrepancyAtFive) {
  const auto f = family(5, 2);
  const auto r = audit_lemma_formula(f[1]);
  EXPECT_NEAR(std::abs(r.lhs), std::sqrt(10.0), 1e-9);
  EXPECT_NEAR(std::abs(r.rhs), std::sqrt(5.0), 1e-9);
  EXPECT_EQ(r.verdict, Verdict::kMismatch);
  // Independent evaluation of the printed right-hand side.
  const auto rhs = -oracle::gauss(5, 2, 1) * oracle::gauss(5, 2, 3) / oracle::gauss(5, 2, 2);
  expect_near(r.rhs, rhs, 1e-9);

  EXPECT_EQ(audit_lemma_formula(f[2]).verdict, Verdict::kNotApplicable);
  EXPECT_EQ(audit_lemma_formula(f[0]).verdict, Verdict::kNotApplicable);
  const auto r3 = audit_lemma_formula(f[3]);
  expect_near(r3.lhs, {-3, 1}, 1e-12);
  EXPECT_EQ(r3.verdict, Verdict::kMismatch);
}

TEST(Classify, Examples) {
  const auto c5 = classify_first_moments(PrimitiveRoot(OddPrime(5), 2));
  ASSERT_EQ(c5.entries.size(), 4U);
  EXPECT_EQ(c5.entries[0].expected, MomentClass::kTrivialNonzero);
  EXPECT_EQ(c5.entries[1].expected, MomentClass::kOddNonzero);
  EXPECT_EQ(c5.entries[2].expected, MomentClass::kEvenZero);
  EXPECT_EQ(c5.entries[3].expected, MomentClass::kOddNonzero);
  EXPECT_EQ(c5.nonzero_count, 3);
  EXPECT_TRUE(c5.consistent());
  EXPECT_EQ(classify_first_moments(find_primitive_root(OddPrime(7))).nonzero_count, 4);
  const auto c3 = classify_first_moments(PrimitiveRoot(OddPrime(3), 2));
  EXPECT_EQ(c3.entries[0].expected, MomentClass::kTrivialNonzero);
  EXPECT_EQ(c3.entries[1].expected, MomentClass::kOddNonzero);
  EXPECT_EQ(c3.nonzero_count, 2);
}

TEST(Classify, SeparationGapUpTo200) {
  for (auto p : oracle::odd_primes_upto(200)) {
    const auto c = classify_first_moments(find_primitive_root(OddPrime(p)));
    EXPECT_TRUE(c.consistent()) << p;
    EXPECT_EQ(2 * c.nonzero_count, p + 1);
    for (const auto& e : c.entries) {
      if (e.expected == MomentClass::kOddNonzero) EXPECT_GT(std::abs(e.value), 10 * c.zero_tolerance);
    }
  }
}

TEST(Tolerances, Formulas) {
  EXPECT_DOUBLE_EQ(zero_tolerance(OddPrime(5)), 1e-9 * 20);
  EXPECT_DOUBLE_EQ(audit_tolerance({0.1, 0}, {0.2, 0}), 1e-8);
  EXPECT_DOUBLE_EQ(audit_tolerance({30, 40}, {1, 0}), 5e-7);
}

}  // namespace
}  // namespace primroot
