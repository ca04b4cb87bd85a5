#include "specpoly/cycloring.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "specpoly/cyclotomic.hpp"
#include "specpoly/minpoly.hpp"
#include "specpoly/numtheory.hpp"

namespace specpoly {

namespace {

int mod12(long e) {
  const long r = e % 12;
  return static_cast<int>(r < 0 ? r + 12 : r);
}

}  // namespace

Cyc12 Cyc12::zeta_pow(long e) {
  // z^0..z^5 in the basis; z^6 = -1.
  static const std::array<std::array<int, 4>, 6> kTable{{
      {1, 0, 0, 0},
      {0, 1, 0, 0},
      {0, 0, 1, 0},
      {0, 0, 0, 1},
      {-1, 0, 1, 0},
      {0, -1, 0, 1},
  }};
  const int r = mod12(e);
  const auto& row = kTable[static_cast<std::size_t>(r % 6)];
  const int sign = r < 6 ? 1 : -1;
  return Cyc12(sign * row[0], sign * row[1], sign * row[2], sign * row[3]);
}

std::optional<mpz_class> Cyc12::as_integer() const {
  if (!is_rational_integer()) return std::nullopt;
  return a_[0];
}

Cyc12& Cyc12::operator+=(const Cyc12& rhs) {
  for (std::size_t k = 0; k < 4; ++k) a_[k] += rhs.a_[k];
  return *this;
}

Cyc12& Cyc12::operator-=(const Cyc12& rhs) {
  for (std::size_t k = 0; k < 4; ++k) a_[k] -= rhs.a_[k];
  return *this;
}

Cyc12& Cyc12::operator*=(const Cyc12& rhs) {
  std::array<mpz_class, 7> r{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a_[i].get_mpz_t(), rhs.a_[j].get_mpz_t());
    }
  }
  // z^k = z^(k-2) - z^(k-4)
  for (std::size_t k = 6; k >= 4; --k) {
    r[k - 2] += r[k];
    r[k - 4] -= r[k];
  }
  for (std::size_t k = 0; k < 4; ++k) a_[k] = std::move(r[k]);
  return *this;
}

std::complex<double> Cyc12::to_complex() const {
  std::complex<double> out = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    out += a_[k].get_d() * std::polar(1.0, std::numbers::pi * static_cast<double>(k) / 6.0);
  }
  return out;
}

std::string Cyc12::to_string() const {
  return "[" + a_[0].get_str() + ", " + a_[1].get_str() + ", " + a_[2].get_str() + ", " + a_[3].get_str() + "]";
}

Cyc12 cyc_mul(const Cyc12& a, const Cyc12& b) { return a * b; }

Cyc12 cyc_pow(Cyc12 base, std::uint64_t e) {
  Cyc12 result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

UnitPoint UnitPoint::from_exponent(long e) { return UnitPoint(mod12(e)); }

std::optional<UnitPoint> UnitPoint::parse(std::string_view name) {
  if (name == "one" || name == "1") return one();
  if (name == "sigma") return sigma();
  if (name == "i") return i();
  if (name == "omega") return omega();
  if (name == "-1" || name == "minus_one") return minus_one();
  return std::nullopt;
}

UnitPoint::Tag UnitPoint::tag() const {
  switch (exponent_) {
    case 0: return Tag::One;
    case 2: return Tag::Sigma;
    case 3: return Tag::I;
    case 4: return Tag::Omega;
    case 6: return Tag::MinusOne;
    default: return Tag::Other;
  }
}

std::string UnitPoint::name() const {
  switch (tag()) {
    case Tag::One: return "1";
    case Tag::Sigma: return "sigma";
    case Tag::I: return "i";
    case Tag::Omega: return "omega";
    case Tag::MinusOne: return "-1";
    case Tag::Other: break;
  }
  return "zeta^" + std::to_string(exponent_);
}

int UnitPoint::order() const { return 12 / static_cast<int>(numtheory::gcd(static_cast<std::uint64_t>(exponent_), 12)); }

UnitPoint UnitPoint::pow(std::uint64_t e) const {
  return UnitPoint(static_cast<int>((static_cast<std::uint64_t>(exponent_) * (e % 12)) % 12));
}

UnitPoint lambda_of(int k) {
  switch (k) {
    case 0: return UnitPoint::one();
    case 1: return UnitPoint::sigma();
    case 2: return UnitPoint::i();
    case 3: return UnitPoint::omega();
    case 4: return UnitPoint::minus_one();
    default: throw std::invalid_argument("lambda_of: k must be in {0..4}");
  }
}

Cyc12 poly_at(const IntPoly& p, const Cyc12& z) {
  Cyc12 acc;
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc *= z;
    acc += Cyc12::from_integer(cs[k]);
  }
  return acc;
}

Cyc12 poly_at(const IntPoly& p, const UnitPoint& z) {
  std::array<mpz_class, 12> buckets{};
  const auto e = static_cast<std::uint64_t>(z.exponent());
  const auto& cs = p.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) buckets[(k * e) % 12] += cs[k];
  Cyc12 acc;
  for (long r = 0; r < 12; ++r) {
    const mpz_class& b = buckets[static_cast<std::size_t>(r)];
    if (b == 0) continue;
    const Cyc12 t = Cyc12::zeta_pow(r);
    acc += Cyc12(t[0] * b, t[1] * b, t[2] * b, t[3] * b);
  }
  return acc;
}

Cyc12 w_value(std::uint64_t n, const UnitPoint& z) {
  if (n == 0) throw std::invalid_argument("w_value: n must be positive");
  const IntPoly cn = cyclotomic(n);
  Cyc12 value = poly_at(cn, z);
  const auto half_twice = numtheory::totient(n);  // 2 * (phi(n)/2)
  if (half_twice % 2 != 0) {
    if (value == Cyc12{}) return value;
    throw std::domain_error("w_value: phi(" + std::to_string(n) + ") is odd and C_n(" + z.name() + ") != 0");
  }
  const auto order = static_cast<std::uint64_t>(z.order());
  const std::uint64_t half = half_twice / 2;
  const std::uint64_t inverse_power = (order - half % order) % order;
  return value * z.pow(inverse_power).value();
}

CheckResult check_lemma3(std::uint64_t p, std::uint64_t n, const UnitPoint& z) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("check_lemma3: p must be prime");
  if (n < 3) throw std::invalid_argument("check_lemma3: n must be >= 3");
  const Cyc12 lhs = w_value(p * n, z);
  const Cyc12 lifted = w_value(n, z.pow(p));
  auto describe = [&](const char* identity, const Cyc12& a, const Cyc12& b) {
    return std::string(identity) + " failed for p=" + std::to_string(p) + ", n=" + std::to_string(n) +
           ", z=" + z.name() + ": " + a.to_string() + " vs " + b.to_string();
  };
  if (n % p == 0) {
    if (lhs != lifted) return CheckResult::fail(describe("w(pn,z) = w(n,z^p)", lhs, lifted));
  } else {
    const Cyc12 product = lhs * w_value(n, z);
    if (product != lifted) return CheckResult::fail(describe("w(pn,z) w(n,z) = w(n,z^p)", product, lifted));
  }
  return CheckResult::pass();
}

CheckResult check_value_identity(std::uint64_t n, int k) {
  if (n < 3) throw std::invalid_argument("check_value_identity: n must be >= 3");
  const UnitPoint z = lambda_of(k);
  const Cyc12 w = w_value(n, z);
  const auto prefix = "phi_" + std::to_string(n) + "(" + std::to_string(k) + ")";
  if (!w.is_rational_integer()) {
    return CheckResult::fail(prefix + ": w(n, " + z.name() + ") = " + w.to_string() + " is not a rational integer");
  }
  const mpz_class phi_value = eval_int(phi_min(n), k);
  if (phi_value != w[0]) {
    return CheckResult::fail(prefix + " = " + phi_value.get_str() + " but w(n, " + z.name() + ") = " + w[0].get_str());
  }
  if (k == 0 && w[0] != static_cast<unsigned long>(numtheory::nu(n))) {
    return CheckResult::fail(prefix + ": C_n(1) = " + w[0].get_str() + " differs from v(n)");
  }
  return CheckResult::pass();
}

}  // namespace specpoly
