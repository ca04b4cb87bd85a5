#pragma once

#include <cstdint>
#include <vector>

namespace specpoly::numtheory {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Trial division; throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);

/// Returns -1, 0 or 1.
int moebius(std::uint64_t n);

/// Prime-power indicator: p when n = p^k with k >= 1, otherwise 1.
/// nu(1) = 1 by convention so that sweeps starting at n = 1 need no special
/// case; the indicator is only meaningful for n >= 2.
std::uint64_t nu(std::uint64_t n);

/// Product of the distinct prime divisors; radical(1) = 1.
std::uint64_t radical(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace specpoly::numtheory
