#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "specpoly/check.hpp"

namespace specpoly {

/// Sign attached to v(n) by the value theorems: -1 when v = -1 mod
/// `modulus`, +1 otherwise, unless `special_cases` pins the sign of v.
struct SignRule {
  int modulus = 4;
  std::map<std::uint64_t, int> special_cases;

  int sign(std::uint64_t v) const;
  mpz_class predicted(std::uint64_t v) const;
};

/// Theorem k (1..5) states phi_{multiplier n}(point) = sign(v(n)) v(n).
struct TheoremSpec {
  int id;
  std::uint64_t multiplier;
  long point;
  /// Theorem 1 has no sign rule (the value is always v(n)).
  bool signed_rule;
  SignRule rule;
};

/// Throws std::invalid_argument outside 1..5.
const TheoremSpec& theorem_spec(int theorem);

struct VerificationRow {
  std::uint64_t n = 0;
  int theorem = 0;
  mpz_class computed;
  mpz_class predicted;
  bool pass = false;
};

/// How computed values are obtained. Lucas sums psi_N(2 - k) directly from
/// the Lucas coefficients of C_N; Expanded builds phi_N in the power basis
/// and runs eval_int. Both are exact and agree; Lucas is what makes sweeps
/// to n = 5000 cheap.
enum class PhiEvaluation { Lucas, Expanded };

/// One theorem row; n >= 3. For theorem 3 the row also requires the
/// computed value to equal phi_{2n}(4).
VerificationRow verify_theorem(int theorem, std::uint64_t n, PhiEvaluation mode = PhiEvaluation::Lucas);

VerificationRow theorem1(std::uint64_t n, PhiEvaluation mode = PhiEvaluation::Lucas);
VerificationRow theorem2(std::uint64_t n, PhiEvaluation mode = PhiEvaluation::Lucas);
VerificationRow theorem3(std::uint64_t n, PhiEvaluation mode = PhiEvaluation::Lucas);
VerificationRow theorem4(std::uint64_t n, PhiEvaluation mode = PhiEvaluation::Lucas);
VerificationRow theorem5(std::uint64_t n, PhiEvaluation mode = PhiEvaluation::Lucas);

/// Rows for every n in [lo, hi], ordered by n. With jobs > 1 the range is
/// split into contiguous blocks evaluated on separate threads.
std::vector<VerificationRow> sweep(int theorem, std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1,
                                   PhiEvaluation mode = PhiEvaluation::Lucas);

/// True for n = 3^k, k >= 1, where w(6n, sigma) = -w(3n, omega).
bool eq12_applies(std::uint64_t n);

/// w(6n, sigma) = w(3n, omega) for n >= 2, with the sign flip at n = 3^k.
CheckResult check_eq11_eq12(std::uint64_t n);

struct ValueRow {
  std::uint64_t n = 0;
  mpz_class phi_n_0;
  mpz_class phi_2n_4;
  mpz_class phi_3n_3;
  mpz_class phi_4n_2;
  mpz_class phi_6n_1;
  std::uint64_t v_n = 0;

  /// The theorems start at n = 3; smaller rows are listed but unmarked.
  bool in_theorem_range() const { return n >= 3; }
  friend bool operator==(const ValueRow&, const ValueRow&) = default;
};

/// Rows n = 1..max_n. v_n uses nu(1) = 1.
std::vector<ValueRow> value_table(std::uint64_t max_n);

}  // namespace specpoly
