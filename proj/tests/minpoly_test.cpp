#include "specpoly/minpoly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "specpoly/chebylucas.hpp"
#include "specpoly/numtheory.hpp"

namespace specpoly {
namespace {

IntPoly from_oracle(const oracle::Coeffs& c) {
  std::vector<mpz_class> cs;
  for (auto v : c) cs.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(cs));
}

TEST(PsiTest, WorkedExamples) {
  EXPECT_EQ(psi(3), (IntPoly{1, 1}));
  EXPECT_EQ(psi(4), IntPoly::x());
  EXPECT_EQ(psi(5), (IntPoly{-1, 1, 1}));
  EXPECT_EQ(psi(7), (IntPoly{-1, -2, 1, 1}));
  EXPECT_THROW(psi(2), std::invalid_argument);
}

TEST(PsiTest, MatchesRoundedRootProduct) {
  for (std::uint64_t n = 3; n <= 60; ++n) ASSERT_EQ(psi(n), from_oracle(oracle::psi_by_roots(n))) << n;
}

TEST(PhiTest, ListedPolynomials) {
  EXPECT_EQ(phi_min(1), IntPoly::x());
  EXPECT_EQ(phi_min(2), (IntPoly{4, -1}));
  EXPECT_EQ(phi_min(3), (IntPoly{3, -1}));
  EXPECT_EQ(phi_min(4), (IntPoly{2, -1}));
  EXPECT_EQ(phi_min(5), (IntPoly{5, -5, 1}));
  EXPECT_EQ(phi_min(6), (IntPoly{1, -1}));
  EXPECT_EQ(phi_min(7), (IntPoly{7, -14, 7, -1}));
  EXPECT_EQ(phi_min(8), (IntPoly{2, -4, 1}));
  EXPECT_EQ(phi_min(9), (IntPoly{3, -9, 6, -1}));
  EXPECT_EQ(phi_min(12), (IntPoly{1, -4, 1}));
  EXPECT_THROW(phi_min(0), std::invalid_argument);
}

TEST(PhiTest, DegreeSignAndNormalization) {
  for (std::uint64_t n = 3; n <= 2000; ++n) {
    const IntPoly phi = phi_min(n);
    const auto m = numtheory::totient(n) / 2;
    ASSERT_EQ(phi.degree(), m) << n;
    ASSERT_EQ(phi.leading(), m % 2 == 0 ? 1 : -1) << n;
    ASSERT_GT(phi.coeff(0), 0) << n;
  }
}

TEST(PhiTest, LucasEvaluationAgreesWithExpansion) {
  for (std::uint64_t n = 1; n <= 600; ++n) {
    const IntPoly phi = phi_min(n);
    for (long k = -1; k <= 5; ++k) ASSERT_EQ(phi_min_value(n, k), eval_int(phi, k)) << n << " " << k;
  }
}

TEST(PhiTest, BigPhi) {
  EXPECT_EQ(phi_big(1), IntPoly::x());
  EXPECT_EQ(phi_big(2), (IntPoly{4, -1}));
  EXPECT_EQ(phi_big(4), (IntPoly{4, -4, 1}));
  EXPECT_EQ(phi_big(6), (IntPoly{1, -2, 1}));
  for (std::uint64_t n = 3; n <= 100; ++n) ASSERT_EQ(phi_big(n).degree(), numtheory::totient(n));
}

TEST(PhiTest, SpreadFactorization) {
  EXPECT_TRUE(check_spread_factorization(1));
  EXPECT_EQ(phi_big(1) * phi_big(2) * phi_big(4), spread(4));
  EXPECT_EQ(phi_big(1) * phi_big(2) * phi_big(3) * phi_big(6), (IntPoly{0, 36, -105, 112, -54, 12, -1}));
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto r = check_spread_factorization(n);
    ASSERT_TRUE(r) << r.detail;
  }
}

TEST(PhiTest, FloatOracle) {
  auto near = [](const std::vector<double>& got, const std::vector<double>& want) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], 1e-12);
  };
  near(phi_float_oracle(5), {5.0, -5.0, 1.0});
  near(phi_float_oracle(4), {2.0, -1.0});
  near(phi_float_oracle(12), {1.0, -4.0, 1.0});
  for (std::uint64_t n = 3; n <= 200; ++n) {
    const IntPoly phi = phi_min(n);
    const auto approx = phi_float_oracle(n);
    ASSERT_EQ(approx.size(), phi.size()) << n;
    for (std::size_t k = 0; k < approx.size(); ++k) {
      const double exact = phi.coeff(k).get_d();
      ASSERT_LE(std::abs(approx[k] - exact), 1e-6 * std::abs(exact)) << n << " " << k;
    }
  }
}

TEST(PhiTest, RootCheck) {
  for (std::uint64_t n = 3; n <= 500; ++n) {
    const double s = std::sin(std::numbers::pi / static_cast<double>(n));
    ASSERT_NEAR(eval_at_double(phi_min(n), 4.0 * s * s), 0.0, 1e-8) << n;
  }
}

TEST(PhiTest, SineProduct) {
  EXPECT_NEAR(sine_product(9), 3.0, 1e-12);
  EXPECT_NEAR(sine_product(6), 1.0, 1e-12);
  EXPECT_NEAR(sine_product(4), 2.0, 1e-12);
  EXPECT_THROW(sine_product(1), std::invalid_argument);
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    const auto r = sine_product_check(n);
    ASSERT_TRUE(r) << r.detail;
  }
}

}  // namespace
}  // namespace specpoly
