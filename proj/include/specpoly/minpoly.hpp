#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "specpoly/check.hpp"
#include "specpoly/polyz.hpp"

namespace specpoly {

/// Raised if phi_min(n), n >= 3, comes out with a non-positive constant
/// term. The construction never flips signs to force normalization.
class NormalizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Minimal polynomial of 2cos(2 pi / n), n >= 3, obtained by rewriting the
/// palindromic C_n in the Lucas basis.
IntPoly psi(std::uint64_t n);

/// Minimal polynomial of 4 sin^2(pi / n) with positive constant term:
/// psi_n(2 - x) for n >= 3, x for n = 1 and 4 - x for n = 2.
IntPoly phi_min(std::uint64_t n);

/// Factor of the spread polynomial: phi_n^2 for n >= 3, phi_n otherwise.
IntPoly phi_big(std::uint64_t n);

/// phi_min(n) evaluated exactly at an integer k. For n >= 3 this is
/// psi_n(2 - k) summed directly in the Lucas basis, so phi_n is never
/// expanded; it agrees with eval_int(phi_min(n), k).
mpz_class phi_min_value(std::uint64_t n, long k);

/// Z_n = prod_{d | n} Phi_d, compared coefficient by coefficient.
CheckResult check_spread_factorization(std::uint64_t n);

/// Ascending coefficients of prod_{0<j<n/2, gcd(j,n)=1} (4 sin^2(j pi/n) - x)
/// in double precision. n >= 3.
std::vector<double> phi_float_oracle(std::uint64_t n);

/// prod_{0<k<n, gcd(k,n)=1} 2 sin(k pi / n), n >= 2.
double sine_product(std::uint64_t n);

/// sine_product(n) within 1e-8 relative of nu(n).
CheckResult sine_product_check(std::uint64_t n);

}  // namespace specpoly
