#include "specpoly/minpoly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "specpoly/chebylucas.hpp"
#include "specpoly/cyclotomic.hpp"
#include "specpoly/numtheory.hpp"

namespace specpoly {

namespace {

void require_at_least(std::uint64_t n, std::uint64_t lo, const char* what) {
  if (n < lo) {
    throw std::invalid_argument(std::string(what) + ": n must be >= " + std::to_string(lo));
  }
}

}  // namespace

IntPoly psi(std::uint64_t n) {
  require_at_least(n, 3, "psi");
  return lucas_combination(palindromic_to_lucas(cyclotomic(n)));
}

IntPoly phi_min(std::uint64_t n) {
  require_at_least(n, 1, "phi_min");
  if (n == 1) return IntPoly::x();
  if (n == 2) return IntPoly{4, -1};
  IntPoly out = compose_linear(psi(n), 2, -1);
  if (out.coeff(0) <= 0) {
    throw NormalizationError("phi_min: constant term of phi_" + std::to_string(n) + " is " +
                             out.coeff(0).get_str() + ", expected positive");
  }
  return out;
}

IntPoly phi_big(std::uint64_t n) {
  require_at_least(n, 1, "phi_big");
  IntPoly phi = phi_min(n);
  if (n <= 2) return phi;
  return phi * phi;
}

mpz_class phi_min_value(std::uint64_t n, long k) {
  require_at_least(n, 1, "phi_min_value");
  if (n <= 2) return eval_int(phi_min(n), k);
  return palindromic_lucas_value(cyclotomic(n), 2 - k);
}

CheckResult check_spread_factorization(std::uint64_t n) {
  require_at_least(n, 1, "check_spread_factorization");
  IntPoly product{1};
  for (auto d : numtheory::divisors(n)) product *= phi_big(d);
  const IntPoly z = spread(n);
  if (const auto at = first_mismatch(z, product)) {
    return CheckResult::fail("Z_n = prod Phi_d failed for n=" + std::to_string(n) + " at coefficient " +
                             std::to_string(*at));
  }
  return CheckResult::pass();
}

std::vector<double> phi_float_oracle(std::uint64_t n) {
  require_at_least(n, 3, "phi_float_oracle");
  std::vector<double> coeffs{1.0};
  for (std::uint64_t j = 1; 2 * j < n; ++j) {
    if (numtheory::gcd(j, n) != 1) continue;
    const double s = std::sin(std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    const double root = 4.0 * s * s;
    // multiply by (root - x)
    coeffs.push_back(0.0);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k) coeffs[k] = root * coeffs[k] - coeffs[k - 1];
    coeffs[0] *= root;
  }
  return coeffs;
}

double sine_product(std::uint64_t n) {
  require_at_least(n, 2, "sine_product");
  double prod = 1.0;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (numtheory::gcd(k, n) != 1) continue;
    prod *= 2.0 * std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  return prod;
}

CheckResult sine_product_check(std::uint64_t n) {
  const double value = sine_product(n);
  const double expected = static_cast<double>(numtheory::nu(n));
  if (std::abs(value - expected) > 1e-8 * expected) {
    return CheckResult::fail("sine product for n=" + std::to_string(n) + " is " + std::to_string(value) +
                             ", expected " + std::to_string(expected));
  }
  return CheckResult::pass();
}

}  // namespace specpoly
