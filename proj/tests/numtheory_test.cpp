#include "specpoly/numtheory.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"

namespace specpoly::numtheory {
namespace {

TEST(NumTheoryTest, Factorize) {
  EXPECT_EQ(factorize(12), (Factorization{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(97), (Factorization{{97, 1}}));
  EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(NumTheoryTest, FactorizationInvariants) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto f = factorize(n);
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      ASSERT_TRUE(is_prime(f[i].prime)) << n;
      ASSERT_GE(f[i].exponent, 1u);
      if (i > 0) ASSERT_LT(f[i - 1].prime, f[i].prime);
      for (unsigned e = 0; e < f[i].exponent; ++e) product *= f[i].prime;
    }
    ASSERT_EQ(product, n);
    ASSERT_EQ(f.empty(), n == 1);
  }
}

TEST(NumTheoryTest, Totient) {
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(7), 6u);
  EXPECT_EQ(totient(12), 4u);
  EXPECT_THROW(totient(0), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 500; ++n) ASSERT_EQ(totient(n), oracle::brute_totient(n)) << n;
}

TEST(NumTheoryTest, TotientDivisorSumAndMultiplicativity) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t sum = 0;
    for (auto d : divisors(n)) sum += totient(d);
    ASSERT_EQ(sum, n);
  }
  for (std::uint64_t a = 1; a <= 100; ++a) {
    for (std::uint64_t b = 1; a * b <= 10000; ++b) {
      if (std::gcd(a, b) == 1) ASSERT_EQ(totient(a * b), totient(a) * totient(b)) << a << "," << b;
    }
  }
}

TEST(NumTheoryTest, TotientPrimeStep) {
  for (std::uint64_t p = 2; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t n = 1; n <= 500; ++n) {
      const auto expected = n % p == 0 ? p * totient(n) : (p - 1) * totient(n);
      ASSERT_EQ(totient(p * n), expected) << p << "," << n;
    }
  }
}

TEST(NumTheoryTest, Moebius) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(12), 0);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_THROW(moebius(0), std::invalid_argument);
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    int sum = 0;
    for (auto d : divisors(n)) sum += moebius(d);
    ASSERT_EQ(sum, 0) << n;
  }
}

TEST(NumTheoryTest, Nu) {
  EXPECT_EQ(nu(8), 2u);
  EXPECT_EQ(nu(9), 3u);
  EXPECT_EQ(nu(6), 1u);
  EXPECT_EQ(nu(1), 1u);
  for (std::uint64_t n = 1; n <= 2000; ++n) ASSERT_EQ(nu(n), oracle::brute_nu(n)) << n;
  for (std::uint64_t n = 1; n <= 10000; ++n) ASSERT_EQ(nu(n) > 1, factorize(n).size() == 1) << n;
}

TEST(NumTheoryTest, Radical) {
  EXPECT_EQ(radical(12), 6u);
  EXPECT_EQ(radical(8), 2u);
  EXPECT_EQ(radical(1), 1u);
  EXPECT_EQ(radical(30000), 30u);
}

TEST(NumTheoryTest, Divisors) {
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
}

}  // namespace
}  // namespace specpoly::numtheory
