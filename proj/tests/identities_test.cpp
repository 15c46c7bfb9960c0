#include "umbra/identities.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"

namespace umbra {
namespace {

// Kronecker delta as a Rational.
Rational kd(std::size_t n, std::size_t m) { return n == m ? Rational(1) : Rational(0); }

TEST(NewtonSum, Examples) {
  EXPECT_EQ(newton_sum(3, 2), 1);
  EXPECT_EQ(newton_sum(0, 5), 1);
  EXPECT_EQ(newton_sum(4, 1), 0);
}

TEST(NewtonSum, MatchesPowerOfShiftedBase) {
  testing::RationalGen gen(307);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational a = gen.next();
    Rational power = 1;
    for (std::size_t n = 0; n <= 25; ++n) {
      ASSERT_EQ(newton_sum(n, a), power);
      power *= a - 1;
    }
  }
}

TEST(AltBinomMoment, Examples) {
  EXPECT_EQ(alt_binom_moment(2, 2), 2);
  EXPECT_EQ(alt_binom_moment(1, 1), -1);
  EXPECT_EQ(alt_binom_moment(5, 2), 0);
  EXPECT_THROW(alt_binom_moment(4, 3), UnsupportedMomentError);
}

TEST(AltBinomMoment, DeltaForms) {
  for (std::size_t n = 0; n <= 100; ++n) {
    ASSERT_EQ(alt_binom_moment(n, 0), kd(n, 0));
    ASSERT_EQ(alt_binom_moment(n, 1), -kd(n, 1));
    ASSERT_EQ(alt_binom_moment(n, 2), 2 * kd(n, 2) - kd(n, 1));
  }
}

TEST(LambdaAltSum, Examples) {
  EXPECT_EQ(lambda_alt_sum(2, -2, 2), 2);
  EXPECT_EQ(lambda_alt_sum(0, 7, 3), 3);
  EXPECT_EQ(lambda_alt_sum(4, -2, 2), 0);
}

TEST(LambdaAltSum, DeltaForm) {
  testing::RationalGen gen(311);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = gen.next();
    const Rational b = gen.next();
    for (std::size_t n = 0; n <= 40; ++n) {
      ASSERT_EQ(lambda_alt_sum(n, a, b), 2 * kd(n, 2) - a * kd(n, 1) + b * kd(n, 0));
    }
  }
}

TEST(LambdaAltSum, ReproducesCnj) {
  // c_nj = sum over k of the same alternating weights with Lambda shifted by j.
  testing::RationalGen gen(313);
  for (int trial = 0; trial < 5; ++trial) {
    const EulerProblem p{gen.next(), gen.next()};
    for (long n = 0; n <= 20; ++n) {
      for (long j = 0; j <= n; ++j) {
        const auto m = static_cast<std::size_t>(n - j);
        ASSERT_EQ(cnj_oracle(p, n, j), lambda_alt_sum(m, p.a + 2 * j, indicial(p, j)))
            << "n=" << n << " j=" << j;
      }
    }
  }
}

TEST(IdentitySuite, DefaultSamplesPass) {
  const auto reports = run_identity_suite(50, default_identity_samples());
  ASSERT_EQ(reports.size(), 15u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.name;
    EXPECT_EQ(r.n_max, 50u);
    EXPECT_GT(r.checks, 0u) << r.name;
    EXPECT_FALSE(r.statement.empty());
  }
  EXPECT_EQ(reports.front().name, "newton_binomial");
  EXPECT_EQ(reports.back().name, "indicial_alternating_sum");
}

TEST(IdentitySuite, ZeroHorizon) {
  for (const auto& r : run_identity_suite(0, default_identity_samples())) EXPECT_TRUE(r.passed()) << r.name;
}

TEST(IdentitySuite, RandomSamplesPass) {
  testing::RationalGen gen(317);
  std::vector<EulerProblem> samples;
  for (int i = 0; i < 6; ++i) samples.push_back({gen.next(), gen.next()});
  samples.push_back({1, 0});
  for (const auto& r : run_identity_suite(100, samples)) EXPECT_TRUE(r.passed()) << r.name;
}

TEST(IdentitySuite, SecondMomentWeightedValue) {
  // sum (-1)^(3-k) C(3,k) k^2 2^k = 6 - 48 + 72, and n a (n a - 1)(a - 1)^(n-2) = 30.
  Rational sum = 0;
  for (std::size_t k = 0; k <= 3; ++k) {
    const Rational term = Rational(binomial(3, k)) * static_cast<unsigned long>(k * k) * pow(Rational(2), k);
    sum += alternating_sign(3 - k) * term;
  }
  EXPECT_EQ(sum, 30);
}

}  // namespace
}  // namespace umbra
