#include "specpoly/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specpoly::numtheory {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be positive");
  }
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization result;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) result.push_back({p, e});
  };
  take(2);
  for (std::uint64_t p = 3; p <= n / p; p += 2) take(p);
  if (n > 1) result.push_back({n, 1});
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t totient(std::uint64_t n) {
  require_positive(n, "totient");
  std::uint64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  const auto f = factorize(n);
  for (const auto& pp : f) {
    if (pp.exponent > 1) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t nu(std::uint64_t n) {
  require_positive(n, "nu");
  const auto f = factorize(n);
  return f.size() == 1 ? f.front().prime : 1;
}

std::uint64_t radical(std::uint64_t n) {
  require_positive(n, "radical");
  std::uint64_t r = 1;
  for (const auto& pp : factorize(n)) r *= pp.prime;
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const auto count = ds.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace specpoly::numtheory
