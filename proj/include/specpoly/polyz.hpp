#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace specpoly {

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored in ascending degree order, so coeffs()[k]
/// multiplies x^k. The top coefficient is always nonzero; the zero
/// polynomial is the empty vector and has no degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  std::vector<mpz_class> release() && { return std::move(coeffs_); }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^k, zero beyond the degree.
  mpz_class coeff(std::size_t k) const;
  /// Throws std::domain_error for the zero polynomial.
  const mpz_class& leading() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& scalar);

  /// In-place multiplication by x^d - 1.
  void mul_binomial(std::size_t d);
  /// In-place exact division by x^d - 1; throws InexactDivision otherwise.
  void div_binomial(std::size_t d);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

/// Raised when a division that must be exact leaves a remainder.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
inline IntPoly sub(const IntPoly& a, const IntPoly& b) { return a - b; }
inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

/// Returns q with a = q * b. Throws std::domain_error when b is zero and
/// InexactDivision when b does not divide a over the integers.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Horner evaluation at an integer point.
mpz_class eval_int(const IntPoly& p, const mpz_class& x);

/// p(a + b*x).
IntPoly compose_linear(IntPoly p, const mpz_class& a, const mpz_class& b);

/// p(x^k), k >= 1.
IntPoly substitute_power(const IntPoly& p, std::size_t k);

/// True iff coeffs[j] == coeffs[deg - j] for all j. The zero polynomial
/// counts as palindromic.
bool is_palindromic(const IntPoly& p);

/// Evaluates p at a double exactly (the double is a dyadic rational) and
/// rounds the result once.
double eval_at_double(const IntPoly& p, double x);

/// Index of the first coefficient where a and b differ, if any.
std::optional<std::size_t> first_mismatch(const IntPoly& a, const IntPoly& b);

}  // namespace specpoly
