#include "specpoly/cycloring.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "specpoly/cyclotomic.hpp"
#include "specpoly/numtheory.hpp"

namespace specpoly {
namespace {

const Cyc12 kZeta(0, 1, 0, 0);

Cyc12 random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-30, 30);
  return Cyc12(d(rng), d(rng), d(rng), d(rng));
}

TEST(Cyc12Test, Units) {
  const Cyc12 i = Cyc12::zeta_pow(3);
  EXPECT_EQ(cyc_mul(i, i), Cyc12(-1));
  EXPECT_EQ(cyc_pow(Cyc12::zeta_pow(4), 3), Cyc12(1));
  EXPECT_EQ(cyc_mul(Cyc12::zeta_pow(2), Cyc12::zeta_pow(2)), Cyc12(-1, 0, 1, 0));
  EXPECT_EQ(cyc_pow(kZeta, 6), Cyc12(-1));
  EXPECT_EQ(cyc_pow(kZeta, 12), Cyc12(1));
  for (std::uint64_t e = 1; e < 12; ++e) EXPECT_NE(cyc_pow(kZeta, e), Cyc12(1)) << e;
  for (long e = -24; e <= 24; ++e) {
    ASSERT_EQ(Cyc12::zeta_pow(e), e >= 0 ? cyc_pow(kZeta, static_cast<std::uint64_t>(e))
                                         : cyc_pow(kZeta, static_cast<std::uint64_t>(12 - (-e) % 12)));
  }
}

TEST(Cyc12Test, RingAxioms) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Cyc12());
  }
}

TEST(Cyc12Test, ComplexEmbeddingIsHomomorphic) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_element(rng), b = random_element(rng);
    const auto want = a.to_complex() * b.to_complex();
    const auto got = (a * b).to_complex();
    ASSERT_NEAR(std::abs(got - want), 0.0, 1e-9);
  }
}

TEST(UnitPointTest, LambdaValues) {
  EXPECT_EQ(lambda_of(0).tag(), UnitPoint::Tag::One);
  EXPECT_EQ(lambda_of(1).tag(), UnitPoint::Tag::Sigma);
  EXPECT_EQ(lambda_of(2).tag(), UnitPoint::Tag::I);
  EXPECT_EQ(lambda_of(3).tag(), UnitPoint::Tag::Omega);
  EXPECT_EQ(lambda_of(4).tag(), UnitPoint::Tag::MinusOne);
  EXPECT_THROW(lambda_of(5), std::invalid_argument);
  // lambda(k) = (2 - k + sqrt(k^2 - 4k)) / 2 on the upper branch.
  for (int k = 0; k <= 4; ++k) {
    const std::complex<double> root = std::sqrt(std::complex<double>(k * k - 4.0 * k, 0.0));
    const auto expected = (2.0 - k + root) / 2.0;
    EXPECT_NEAR(std::abs(lambda_of(k).value().to_complex() - expected), 0.0, 1e-12) << k;
  }
}

TEST(UnitPointTest, OrdersAndPowers) {
  const std::vector<std::pair<UnitPoint, int>> cases{{UnitPoint::one(), 1},
                                                     {UnitPoint::sigma(), 6},
                                                     {UnitPoint::i(), 4},
                                                     {UnitPoint::omega(), 3},
                                                     {UnitPoint::minus_one(), 2}};
  for (const auto& [z, order] : cases) {
    EXPECT_EQ(z.order(), order);
    EXPECT_EQ(cyc_pow(z.value(), static_cast<std::uint64_t>(order)), Cyc12(1));
  }
  EXPECT_EQ(UnitPoint::omega().pow(5).exponent(), 8);
  EXPECT_EQ(UnitPoint::omega().pow(5).tag(), UnitPoint::Tag::Other);
  EXPECT_EQ(UnitPoint::sigma().pow(2), UnitPoint::omega());
  EXPECT_EQ(UnitPoint::parse("-1"), UnitPoint::minus_one());
  EXPECT_FALSE(UnitPoint::parse("tau").has_value());
}

TEST(PolyAtTest, Roots) {
  EXPECT_EQ(poly_at(cyclotomic(4), UnitPoint::i()), Cyc12());
  EXPECT_EQ(poly_at(cyclotomic(3), UnitPoint::omega()), Cyc12());
  EXPECT_EQ(poly_at(cyclotomic(5), UnitPoint::minus_one()), Cyc12(1));
}

TEST(PolyAtTest, HornerMatchesResidueBuckets) {
  for (std::uint64_t n = 1; n <= 150; ++n) {
    const IntPoly c = cyclotomic(n);
    for (long e = 0; e < 12; ++e) {
      const auto z = UnitPoint::from_exponent(e);
      ASSERT_EQ(poly_at(c, z), poly_at(c, z.value())) << n << " " << e;
    }
  }
}

TEST(WValueTest, Examples) {
  EXPECT_EQ(w_value(4, UnitPoint::omega()), Cyc12(-1));
  EXPECT_EQ(w_value(2, UnitPoint::minus_one()), Cyc12());
  EXPECT_EQ(w_value(5, UnitPoint::minus_one()), Cyc12(1));
  EXPECT_EQ(w_value(18, UnitPoint::i()), Cyc12(-1));
  EXPECT_EQ(w_value(15, UnitPoint::omega()), Cyc12(-5));
  EXPECT_EQ(w_value(9, UnitPoint::one()), Cyc12(3));
  EXPECT_THROW(w_value(2, UnitPoint::i()), std::domain_error);
}

TEST(WValueTest, FloatCrossCheck) {
  for (std::uint64_t n = 3; n <= 80; ++n) {
    const IntPoly c = cyclotomic(n);
    const double half = static_cast<double>(numtheory::totient(n)) / 2.0;
    for (long e = 0; e < 12; ++e) {
      const auto z = std::polar(1.0, std::numbers::pi * static_cast<double>(e) / 6.0);
      std::complex<double> value = 0.0;
      for (std::size_t k = c.size(); k-- > 0;) value = value * z + c.coeff(k).get_d();
      value /= std::pow(z, half);
      const auto got = w_value(n, UnitPoint::from_exponent(e)).to_complex();
      ASSERT_NEAR(std::abs(got - value), 0.0, 1e-6 * (1.0 + std::abs(value))) << n << " " << e;
    }
  }
}

TEST(WValueTest, MinusOneIsSignedCyclotomicValue) {
  for (std::uint64_t n = 3; n <= 500; ++n) {
    const auto half = numtheory::totient(n) / 2;
    const mpz_class expected = (half % 2 == 0 ? 1 : -1) * eval_int(cyclotomic(n), -1);
    ASSERT_EQ(w_value(n, UnitPoint::minus_one()), Cyc12::from_integer(expected)) << n;
  }
}

TEST(Lemma3Test, Examples) {
  EXPECT_TRUE(check_lemma3(3, 3, UnitPoint::i()));
  EXPECT_TRUE(check_lemma3(5, 3, UnitPoint::omega()));
  EXPECT_TRUE(check_lemma3(2, 9, UnitPoint::i()));
  EXPECT_EQ(w_value(18, UnitPoint::i()), w_value(9, UnitPoint::minus_one()));
  EXPECT_THROW(check_lemma3(2, 2, UnitPoint::i()), std::invalid_argument);
  EXPECT_THROW(check_lemma3(6, 5, UnitPoint::i()), std::invalid_argument);
}

TEST(Lemma3Test, Sweep) {
  const std::vector<UnitPoint> units{UnitPoint::sigma(), UnitPoint::i(), UnitPoint::omega(), UnitPoint::minus_one()};
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 3; n <= 200; ++n) {
      for (const auto& z : units) {
        const auto r = check_lemma3(p, n, z);
        ASSERT_TRUE(r) << r.detail;
      }
    }
  }
}

TEST(ValueIdentityTest, Examples) {
  EXPECT_TRUE(check_value_identity(5, 0));
  EXPECT_TRUE(check_value_identity(8, 4));
  EXPECT_TRUE(check_value_identity(12, 3));
  EXPECT_EQ(w_value(12, UnitPoint::omega()), Cyc12(-2));
  EXPECT_EQ(w_value(8, UnitPoint::minus_one()), Cyc12(2));
  EXPECT_THROW(check_value_identity(2, 0), std::invalid_argument);
}

TEST(ValueIdentityTest, Sweep) {
  for (std::uint64_t n = 3; n <= 500; ++n) {
    for (int k = 0; k <= 4; ++k) {
      const auto r = check_value_identity(n, k);
      ASSERT_TRUE(r) << r.detail;
    }
  }
}

}  // namespace
}  // namespace specpoly
