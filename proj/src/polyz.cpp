#include "specpoly/polyz.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace specpoly {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> cs(degree + 1);
  cs[degree] = c;
  return IntPoly(std::move(cs));
}

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

mpz_class IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : mpz_class(0);
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

void IntPoly::mul_binomial(std::size_t d) {
  if (coeffs_.empty() || d == 0) {
    coeffs_.clear();
    return;
  }
  const std::size_t old = coeffs_.size();
  coeffs_.resize(old + d);
  // new[i] = old[i - d] - old[i], walking down so old[i - d] is still intact.
  for (std::size_t i = old + d; i-- > d;) {
    mpz_sub(coeffs_[i].get_mpz_t(), coeffs_[i - d].get_mpz_t(), coeffs_[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < d; ++i) mpz_neg(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t());
  normalize();
}

void IntPoly::div_binomial(std::size_t d) {
  if (d == 0) throw std::domain_error("division by zero polynomial");
  if (coeffs_.empty()) return;
  const std::size_t top = coeffs_.size() - 1;
  if (top < d) {
    throw InexactDivision("x^" + std::to_string(d) + " - 1 does not divide polynomial of degree " +
                          std::to_string(top));
  }
  // a = q (x^d - 1) gives q[i] = q[i - d] - a[i] for i <= top - d; the
  // remainder vanishes iff a[i] = q[i - d] above that. q overwrites a from
  // the bottom, and q[i - d] is always written before a[i] is read.
  const std::size_t qtop = top - d;
  for (std::size_t i = 0; i <= qtop; ++i) {
    if (i >= d) {
      mpz_sub(coeffs_[i].get_mpz_t(), coeffs_[i - d].get_mpz_t(), coeffs_[i].get_mpz_t());
    } else {
      mpz_neg(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t());
    }
  }
  for (std::size_t i = qtop + 1; i <= top; ++i) {
    const bool ok = i >= d ? coeffs_[i] == coeffs_[i - d] : coeffs_[i] == 0;
    if (!ok) {
      throw InexactDivision("nonzero remainder dividing by x^" + std::to_string(d) + " - 1 at degree " +
                            std::to_string(i));
    }
  }
  coeffs_.resize(qtop + 1);
  normalize();
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (a.is_zero()) return {};
  const std::size_t da = *a.degree();
  const std::size_t db = *b.degree();
  if (da < db) throw InexactDivision("exact_div: divisor degree exceeds dividend degree");
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> q(da - db + 1);
  const mpz_class& lc = b.leading();
  for (std::size_t k = da - db + 1; k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw InexactDivision("exact_div: leading coefficient does not divide at degree " + std::to_string(k + db));
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  for (std::size_t k = 0; k < db; ++k) {
    if (rem[k] != 0) {
      throw InexactDivision("exact_div: nonzero remainder at degree " + std::to_string(k));
    }
  }
  return IntPoly(std::move(q));
}

mpz_class eval_int(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc *= x;
    acc += cs[k];
  }
  return acc;
}

IntPoly compose_linear(IntPoly p, const mpz_class& a, const mpz_class& b) {
  if (p.is_zero()) return {};
  // Taylor shift p(x) -> p(x + a) by repeated synthetic division, then
  // scale x^j by b^j.
  std::vector<mpz_class> c = std::move(p).release();
  const std::size_t n = c.size();
  if (a != 0) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t k = n - 1; k-- > i;) {
        mpz_addmul(c[k].get_mpz_t(), c[k + 1].get_mpz_t(), a.get_mpz_t());
      }
    }
  }
  if (b == -1) {
    for (std::size_t k = 1; k < n; k += 2) mpz_neg(c[k].get_mpz_t(), c[k].get_mpz_t());
  } else if (b != 1) {
    mpz_class scale = 1;
    for (std::size_t k = 1; k < n; ++k) {
      scale *= b;
      c[k] *= scale;
    }
  }
  return IntPoly(std::move(c));
}

IntPoly substitute_power(const IntPoly& p, std::size_t k) {
  if (k == 0) throw std::invalid_argument("substitute_power: exponent must be >= 1");
  if (p.is_zero() || k == 1) return p;
  std::vector<mpz_class> out((p.size() - 1) * k + 1);
  for (std::size_t j = 0; j < p.size(); ++j) out[j * k] = p.coeffs()[j];
  return IntPoly(std::move(out));
}

bool is_palindromic(const IntPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

double eval_at_double(const IntPoly& p, double x) {
  if (p.is_zero()) return 0.0;
  if (!std::isfinite(x)) return std::nan("");
  // x = m / 2^s exactly; p(x) * 2^(s*deg) = sum c_j m^j 2^(s*(deg - j)).
  int exp2 = 0;
  const double frac = std::frexp(x, &exp2);
  const mpz_class mant(std::ldexp(frac, 53));
  long s = 53 - exp2;
  mpz_class m = mant;
  if (s < 0) {
    m <<= static_cast<unsigned long>(-s);
    s = 0;
  }
  const std::size_t deg = p.size() - 1;
  mpz_class acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc *= m;
    mpz_class term = p.coeffs()[k];
    term <<= static_cast<unsigned long>(s) * (deg - k);
    acc += term;
  }
  long e = 0;
  const double d = mpz_get_d_2exp(&e, acc.get_mpz_t());
  return std::ldexp(d, static_cast<int>(e - s * static_cast<long>(deg)));
}

std::optional<std::size_t> first_mismatch(const IntPoly& a, const IntPoly& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.coeff(k) != b.coeff(k)) return k;
  }
  return std::nullopt;
}

}  // namespace specpoly
