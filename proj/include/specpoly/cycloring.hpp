#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "specpoly/check.hpp"
#include "specpoly/polyz.hpp"

namespace specpoly {

/// Element a0 + a1 z + a2 z^2 + a3 z^3 of Z[z], z = exp(2 pi i / 12),
/// reduced with z^4 = z^2 - 1 (C_12(z) = 0). Coordinates are canonical.
class Cyc12 {
 public:
  Cyc12() = default;
  Cyc12(long a0) : a_{mpz_class(a0), 0, 0, 0} {}  // NOLINT: integers embed implicitly
  Cyc12(mpz_class a0, mpz_class a1, mpz_class a2, mpz_class a3)
      : a_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static Cyc12 from_integer(const mpz_class& v) { return Cyc12(v, 0, 0, 0); }
  /// z^e for any integer e.
  static Cyc12 zeta_pow(long e);

  const mpz_class& operator[](std::size_t k) const { return a_[k]; }
  const std::array<mpz_class, 4>& coords() const { return a_; }

  bool is_rational_integer() const { return a_[1] == 0 && a_[2] == 0 && a_[3] == 0; }
  /// The integer value when is_rational_integer().
  std::optional<mpz_class> as_integer() const;

  Cyc12& operator+=(const Cyc12& rhs);
  Cyc12& operator-=(const Cyc12& rhs);
  Cyc12& operator*=(const Cyc12& rhs);

  friend Cyc12 operator+(Cyc12 a, const Cyc12& b) { return a += b; }
  friend Cyc12 operator-(Cyc12 a, const Cyc12& b) { return a -= b; }
  friend Cyc12 operator*(Cyc12 a, const Cyc12& b) { return a *= b; }
  friend Cyc12 operator-(const Cyc12& a) { return Cyc12{} - a; }
  friend bool operator==(const Cyc12&, const Cyc12&) = default;

  std::complex<double> to_complex() const;
  /// "[a0, a1, a2, a3]"
  std::string to_string() const;

 private:
  std::array<mpz_class, 4> a_{};
};

Cyc12 cyc_mul(const Cyc12& a, const Cyc12& b);
Cyc12 cyc_pow(Cyc12 base, std::uint64_t e);

/// A twelfth root of unity z^e. The five points the value theorems use are
/// named; other powers (e.g. omega^2) appear as intermediate arguments.
class UnitPoint {
 public:
  enum class Tag { One, Sigma, I, Omega, MinusOne, Other };

  static UnitPoint one() { return UnitPoint(0); }
  static UnitPoint sigma() { return UnitPoint(2); }
  static UnitPoint i() { return UnitPoint(3); }
  static UnitPoint omega() { return UnitPoint(4); }
  static UnitPoint minus_one() { return UnitPoint(6); }
  static UnitPoint from_exponent(long e);
  /// Accepts "one"/"1", "sigma", "i", "omega", "-1"/"minus_one".
  static std::optional<UnitPoint> parse(std::string_view name);

  /// Exponent e in [0, 12) with this point equal to z^e.
  int exponent() const { return exponent_; }
  Tag tag() const;
  std::string name() const;
  Cyc12 value() const { return Cyc12::zeta_pow(exponent_); }
  /// Multiplicative order: 1, 6, 4, 3, 2 for one, sigma, i, omega, -1.
  int order() const;
  UnitPoint pow(std::uint64_t e) const;

  friend bool operator==(const UnitPoint&, const UnitPoint&) = default;

 private:
  explicit UnitPoint(int e) : exponent_(e) {}
  int exponent_ = 0;
};

/// The branch of (2 - k + sqrt(k^2 - 4k)) / 2 with non-negative imaginary
/// part: 1, sigma, i, omega, -1 for k = 0..4.
UnitPoint lambda_of(int k);

/// Horner evaluation of an integer polynomial at an arbitrary ring element.
Cyc12 poly_at(const IntPoly& p, const Cyc12& z);

/// Same value as poly_at(p, z.value()), summing coefficients by residue of
/// the exponent modulo 12.
Cyc12 poly_at(const IntPoly& p, const UnitPoint& z);

/// w(n, z) = C_n(z) / z^(phi(n)/2), using z^-1 = z^(order-1).
/// Requires an even totient (n >= 3) except when C_n(z) = 0, which covers
/// w(2, -1) = 0. For z = 1 this is C_n(1).
Cyc12 w_value(std::uint64_t n, const UnitPoint& z);

/// For prime p and n >= 3:
///   p | n        w(pn, z) = w(n, z^p)
///   p coprime n  w(pn, z) * w(n, z) = w(n, z^p)
CheckResult check_lemma3(std::uint64_t p, std::uint64_t n, const UnitPoint& z);

/// phi_n(k) = w(n, lambda(k)) in Z[z], n >= 3, k in {0..4}, with the
/// w-value required to be a rational integer.
CheckResult check_value_identity(std::uint64_t n, int k);

}  // namespace specpoly
