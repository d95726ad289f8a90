#include <gtest/gtest.h>

#include "opnlab/bound_tables.hpp"
#include "opnlab/errors.hpp"
#include "oracles.hpp"

namespace opnlab {
namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

// rho from a plain sieve, truncated sums written out term by term.
Rational naive_rho(unsigned k, unsigned m, std::uint64_t r, unsigned alpha,
                   const std::vector<std::uint64_t>& primes) {
  auto truncated = [alpha](std::uint64_t p) {
    Rational s(0), term(1);
    for (unsigned i = 0; i <= alpha; ++i) {
      s = s + term;
      term = term / Rational(static_cast<long>(p));
    }
    return s;
  };
  Rational out(1);
  for (unsigned j = 1; j < k; ++j) out = out * truncated(primes[j]);
  for (std::uint64_t j = r; j <= r + m - k; ++j) out = out * truncated(primes[j - 1]);
  return out;
}

class BoundTables : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { sieve_ = new std::vector<std::uint64_t>(oracle::eratosthenes(200'000)); }
  static void TearDownTestSuite() { delete sieve_; }
  static std::vector<std::uint64_t>* sieve_;
};
std::vector<std::uint64_t>* BoundTables::sieve_ = nullptr;

TEST_F(BoundTables, RhoExamples) {
  auto& primes = default_prime_table();
  EXPECT_EQ(rho({1, 9, PrimeIndex(5), 1}, primes), q(117050572800, 76253198879));
  EXPECT_EQ(rho({1, 1, PrimeIndex(2), 1}, primes), q(4, 3));
  EXPECT_EQ(rho({3, 3, PrimeIndex(4), 1}, primes), q(64, 35));
  EXPECT_EQ(rho({1, 2, PrimeIndex(2), 2}, primes), q(13 * 31, 9 * 25));
}

TEST_F(BoundTables, RhoInvalid) {
  auto& primes = default_prime_table();
  EXPECT_THROW(rho({0, 9, PrimeIndex(2), 1}, primes), InvalidArgument);
  EXPECT_THROW(rho({10, 9, PrimeIndex(2), 1}, primes), InvalidArgument);
  EXPECT_THROW(rho({1, 9, PrimeIndex(2), 0}, primes), InvalidArgument);
  EXPECT_THROW(PrimeIndex(0), InvalidArgument);
}

TEST_F(BoundTables, RhoMatchesNaiveProduct) {
  auto& primes = default_prime_table();
  for (unsigned alpha = 1; alpha <= 3; ++alpha)
    for (unsigned k = 1; k <= 3; ++k)
      for (unsigned m = k; m <= 12; ++m)
        for (std::uint64_t r = 2; r <= 40; r += 7)
          EXPECT_EQ(rho({k, m, PrimeIndex(r), alpha}, primes), naive_rho(k, m, r, alpha, *sieve_));
}

TEST_F(BoundTables, RhoLimits) {
  EXPECT_EQ(rho_limit(1), q(1));
  EXPECT_EQ(rho_limit(2), q(4, 3));
  EXPECT_EQ(rho_limit(3), q(32, 20));
  EXPECT_EQ(rho_limit(2, 2), q(13, 9));
  EXPECT_THROW(rho_limit(4), InvalidArgument);
  EXPECT_THROW(rho_limit(0), InvalidArgument);
}

TEST_F(BoundTables, RhoDecreasesAlongTheWindow) {
  auto& primes = default_prime_table();
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned m : {9u, 15u, 30u}) {
      Rational prev = rho({k, m, PrimeIndex(2), 1}, primes);
      for (std::uint64_t r = 3; r < 300; ++r) {
        const Rational cur = rho({k, m, PrimeIndex(r), 1}, primes);
        ASSERT_LT(cur, prev) << k << " " << m << " " << r;
        ASSERT_GT(cur, rho_limit(k));
        prev = cur;
      }
    }
  }
}

TEST_F(BoundTables, FindIExamples) {
  auto& primes = default_prime_table();
  Threshold theta = default_thresholds().get(1);
  EXPECT_EQ(primes.nth_prime(find_I(1, 9, 1, theta, primes)), 11u);
  EXPECT_EQ(primes.nth_prime(find_I(2, 9, 1, theta, primes)), 31u);
  EXPECT_EQ(primes.nth_prime(find_I(3, 20, 1, theta, primes)), 1301u);
}

TEST_F(BoundTables, FindIMatchesNaiveScan) {
  auto& primes = default_prime_table();
  Threshold theta = default_thresholds().get(1);
  // The reference threshold is the published 50-digit value, independent of
  // the library's enclosure.
  const RatInterval reference = oracle::literal_interval(oracle::kSixteenOverPiSquared);
  for (unsigned m = 9; m <= 30; ++m) {
    for (unsigned k = 1; k <= 3; ++k) {
      std::uint64_t r = 2;
      for (;; ++r) {
        const Rational value = naive_rho(k, m, r, 1, *sieve_);
        if (value < reference.lo()) break;
        ASSERT_GT(value, reference.hi()) << "reference too coarse at m=" << m;
      }
      EXPECT_EQ(find_I(k, m, 1, theta, primes).value(), r) << k << " " << m;
    }
  }
}

TEST_F(BoundTables, FindIIsCertifiedAndMinimal) {
  auto& primes = default_prime_table();
  Threshold theta = default_thresholds().get(1);
  for (unsigned m = 9; m <= 40; m += 3) {
    for (unsigned k = 1; k <= 3; ++k) {
      const PrimeIndex I = find_I(k, m, 1, theta, primes);
      EXPECT_EQ(compare(rho({k, m, I, 1}, primes), theta.enclosure), Ordering3::Below);
      if (I.value() > 2) {
        const PrimeIndex before(I.value() - 1);
        EXPECT_EQ(compare(rho({k, m, before, 1}, primes), theta.enclosure), Ordering3::Above);
      }
    }
  }
}

TEST_F(BoundTables, FindIMonotoneInM) {
  auto& primes = default_prime_table();
  Threshold theta = default_thresholds().get(1);
  for (unsigned k = 1; k <= 3; ++k) {
    std::uint64_t prev = 0;
    for (unsigned m = 9; m <= 40; ++m) {
      const std::uint64_t I = find_I(k, m, 1, theta, primes).value();
      EXPECT_GE(I, prev);
      prev = I;
    }
  }
}

TEST_F(BoundTables, FindIRejects) {
  auto& primes = default_prime_table();
  Threshold theta1 = default_thresholds().get(1);
  Threshold theta2 = default_thresholds().get(2);
  EXPECT_THROW(find_I(4, 9, 1, theta1, primes), InvalidArgument);
  EXPECT_THROW(find_I(1, 8, 1, theta1, primes), InvalidArgument);
  EXPECT_NO_THROW(find_I(1, 8, 1, theta1, primes, SearchOptions{1}));
  EXPECT_THROW(find_I(1, 9, 2, theta1, primes), InvalidArgument);
  EXPECT_NO_THROW(find_I(3, 9, 2, theta2, primes));
  // 64/35 is above 16/pi^2, so the window product for k = 4 never gets below.
  EXPECT_EQ(compare(window_prefix(4), theta1.enclosure), Ordering3::Above);
  EXPECT_EQ(window_prefix(4), q(64, 35));
}

TEST_F(BoundTables, Perisastri) {
  const std::uint64_t expected[] = {9, 9, 10, 11, 11, 12, 13, 13, 14, 15, 15, 16};
  for (unsigned m = 9; m <= 20; ++m) EXPECT_EQ(perisastri_bound(m), expected[m - 9]);
  for (unsigned m = 1; m <= 1000; ++m) EXPECT_EQ(perisastri_bound(m), (2 * m + 9) / 3);
}

TEST_F(BoundTables, FullTable) {
  const std::vector<BoundTableRow> expected = {
      {9, 11, 31, 509, 9},
      {10, 11, 31, 593, 9},
      {11, 11, 37, 659, 10},
      {12, 13, 41, 739, 11},
      {13, 13, 43, 811, 11},
      {14, 13, 43, 881, 12},
      {15, 13, 47, 947, 13},
      {16, 13, 53, 1031, 13},
      {17, 17, 53, 1093, 14},
      {18, 17, 59, 1171, 15},
      {19, 17, 61, 1237, 15},
      {20, 17, 61, 1301, 16},
  };
  EXPECT_EQ(generate_table(9, 20, 1, default_prime_table(), default_thresholds()), expected);
}

TEST_F(BoundTables, ParallelTableEqualsSequential) {
  auto& primes = default_prime_table();
  auto& thresholds = default_thresholds();
  const auto sequential = generate_table(9, 45, 1, primes, thresholds, 1);
  EXPECT_EQ(generate_table(9, 45, 1, primes, thresholds, 4), sequential);
  EXPECT_EQ(generate_table(9, 45, 1, primes, thresholds, 1), sequential);
}

TEST_F(BoundTables, TableRejectsBadRange) {
  auto& primes = default_prime_table();
  auto& thresholds = default_thresholds();
  EXPECT_THROW(generate_table(8, 20, 1, primes, thresholds), InvalidArgument);
  EXPECT_THROW(generate_table(21, 20, 1, primes, thresholds), InvalidArgument);
}

}  // namespace
}  // namespace opnlab
