#include "specpoly/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "specpoly/numtheory.hpp"

namespace specpoly {

namespace {

IntPoly squarefree_cyclotomic(std::uint64_t m) {
  // C_2m(x) = C_m(-x) for odd m.
  if (m > 2 && m % 2 == 0) return compose_linear(squarefree_cyclotomic(m / 2), 0, -1);
  // C_m(x) = prod_{d | m} (x^d - 1)^mu(m/d). Multiply first so every
  // division below is exact.
  const auto ds = numtheory::divisors(m);
  IntPoly acc{1};
  for (auto d : ds) {
    if (numtheory::moebius(m / d) == 1) acc.mul_binomial(d);
  }
  for (auto d : ds) {
    if (numtheory::moebius(m / d) == -1) acc.div_binomial(d);
  }
  return acc;
}

class CyclotomicCache {
 public:
  std::shared_ptr<const IntPoly> squarefree(std::uint64_t m) {
    if (m > kCyclotomicCacheLimit) {
      return std::make_shared<const IntPoly>(squarefree_cyclotomic(m));
    }
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(m); it != table_.end()) return it->second;
    }
    auto built = std::make_shared<const IntPoly>(squarefree_cyclotomic(m));
    std::unique_lock lock(mutex_);
    return table_.try_emplace(m, std::move(built)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const IntPoly>> table_;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

std::string mismatch_detail(const char* identity, std::uint64_t p, std::uint64_t n,
                            const IntPoly& lhs, const IntPoly& rhs) {
  const auto at = first_mismatch(lhs, rhs);
  return std::string(identity) + " failed for p=" + std::to_string(p) + ", n=" + std::to_string(n) +
         " at coefficient " + std::to_string(at.value_or(0));
}

}  // namespace

IntPoly cyclotomic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  const auto rad = numtheory::radical(n);
  const auto base = cache().squarefree(rad);
  return n == rad ? *base : substitute_power(*base, n / rad);
}

CheckResult check_lemma1(std::uint64_t p, std::uint64_t n) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("check_lemma1: p must be prime");
  if (n == 0) throw std::invalid_argument("check_lemma1: n must be positive");
  const IntPoly cn = cyclotomic(n);
  const IntPoly cpn = cyclotomic(p * n);
  const IntPoly lifted = substitute_power(cn, p);
  if (n % p == 0) {
    if (cpn != lifted) return CheckResult::fail(mismatch_detail("C_pn(x) = C_n(x^p)", p, n, cpn, lifted));
  } else {
    IntPoly quotient;
    try {
      quotient = exact_div(lifted, cn);
    } catch (const InexactDivision& e) {
      return CheckResult::fail("C_n(x^p) / C_n(x) inexact for p=" + std::to_string(p) +
                               ", n=" + std::to_string(n) + ": " + e.what());
    }
    if (cpn != quotient) {
      return CheckResult::fail(mismatch_detail("C_pn(x) = C_n(x^p) / C_n(x)", p, n, cpn, quotient));
    }
  }
  if (p == 2 && n % 2 == 1 && n > 1) {
    const IntPoly reflected = compose_linear(cn, 0, -1);
    if (cpn != reflected) return CheckResult::fail(mismatch_detail("C_2n(x) = C_n(-x)", p, n, cpn, reflected));
  }
  return CheckResult::pass();
}

CheckResult check_lemma2(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("check_lemma2: n must be >= 2");
  const mpz_class value = eval_int(cyclotomic(n), 1);
  const mpz_class expected = static_cast<unsigned long>(numtheory::nu(n));
  if (value != expected) {
    return CheckResult::fail("C_n(1) = v(n) failed for n=" + std::to_string(n) + ": got " + value.get_str() +
                             ", expected " + expected.get_str());
  }
  return CheckResult::pass();
}

}  // namespace specpoly
