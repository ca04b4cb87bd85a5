#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "specpoly/polyz.hpp"

namespace specpoly {

/// Coefficients of a palindromic polynomial p of degree 2m in the basis
/// {1, x + 1/x, ..., x^m + 1/x^m}:
///
///   p(x) / x^m = c[0] + sum_{k=1..m} c[k] (x^k + x^-k)
///
/// c[0] is an additive constant, not a multiple of L_0 = 2.
struct LucasCoeffs {
  std::vector<mpz_class> c;

  friend bool operator==(const LucasCoeffs&, const LucasCoeffs&) = default;
};

/// L_0 = 2, L_1 = x, L_n = x L_{n-1} - L_{n-2}. Low indices are memoized.
IntPoly lucas(std::uint64_t n);

/// Exact L_n(y) at an integer point, by the same recurrence.
mpz_class lucas_value(std::uint64_t n, long y);

/// Z_n(x) = 2 - L_n(2 - x), n >= 1.
IntPoly spread(std::uint64_t n);

/// Z_n(k) for k in {0, 1, 2, 3, 4}, read off the periodic tables
/// (periods 1, 6, 4, 3, 2). Z_0 is taken as 0.
long spread_value(std::uint64_t n, int k);

/// Period of n -> Z_n(k) for k in {0..4}.
int spread_period(int k);

/// Rejects (std::invalid_argument) input that is not palindromic of even
/// degree. The zero polynomial is rejected too.
LucasCoeffs palindromic_to_lucas(const IntPoly& p);

/// Inverse of palindromic_to_lucas: rebuilds the palindromic polynomial.
IntPoly lucas_to_palindromic(const LucasCoeffs& lc);

/// c[0] + sum_{k>=1} c[k] L_k(x).
IntPoly lucas_combination(const LucasCoeffs& lc);

/// c[0] + sum_{k>=1} c[k] L_k(y) evaluated exactly without expanding the
/// combination into the power basis.
mpz_class lucas_combination_value(const LucasCoeffs& lc, long y);

/// For palindromic p of degree 2m, the value of p(z)/z^m at any z with
/// z + 1/z = y. Same as lucas_combination_value(palindromic_to_lucas(p), y)
/// without copying the coefficients.
mpz_class palindromic_lucas_value(const IntPoly& p, long y);

}  // namespace specpoly
