#pragma once

#include <cstdint>

#include "specpoly/check.hpp"
#include "specpoly/polyz.hpp"

namespace specpoly {

/// The n-th cyclotomic polynomial C_n. Built as the Moebius product of
/// binomials x^d - 1 over the squarefree radical of n, then lifted with
/// C_n(x) = C_rad(x^(n/rad)). Every binomial division is checked to be
/// exact. Results for small radicals are memoized process-wide.
IntPoly cyclotomic(std::uint64_t n);

/// Radicals up to this bound are kept in the memo cache.
inline constexpr std::uint64_t kCyclotomicCacheLimit = 2048;

/// For prime p:
///   p | n        C_pn(x) = C_n(x^p)
///   p coprime n  C_pn(x) = C_n(x^p) / C_n(x)
///   p = 2, n odd additionally C_2n(x) = C_n(-x)
/// Throws std::invalid_argument if p is not prime or n = 0.
CheckResult check_lemma1(std::uint64_t p, std::uint64_t n);

/// C_n(1) = nu(n) for n >= 2.
CheckResult check_lemma2(std::uint64_t n);

}  // namespace specpoly
