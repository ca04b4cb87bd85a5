#include "specpoly/chebylucas.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace specpoly {

namespace {

constexpr std::uint64_t kLucasCacheLimit = 1024;

IntPoly lucas_step(const IntPoly& prev, const IntPoly& prev2) {
  return IntPoly::x() * prev - prev2;
}

class LucasTable {
 public:
  IntPoly get(std::uint64_t n) {
    if (n > kLucasCacheLimit) {
      std::shared_ptr<const IntPoly> a, b;
      {
        auto lock = grow(kLucasCacheLimit);
        a = table_[kLucasCacheLimit - 1];
        b = table_[kLucasCacheLimit];
      }
      IntPoly l0 = *a, l1 = *b;
      for (std::uint64_t k = kLucasCacheLimit + 1; k <= n; ++k) {
        IntPoly next = lucas_step(l1, l0);
        l0 = std::move(l1);
        l1 = std::move(next);
      }
      return l1;
    }
    auto lock = grow(n);
    return *table_[n];
  }

 private:
  // Returns a shared lock under which table_ holds at least n + 1 entries.
  std::shared_lock<std::shared_mutex> grow(std::uint64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (table_.size() > n) return lock;
    }
    {
      std::unique_lock lock(mutex_);
      if (table_.empty()) {
        table_.push_back(std::make_shared<const IntPoly>(IntPoly{2}));
        table_.push_back(std::make_shared<const IntPoly>(IntPoly::x()));
      }
      while (table_.size() <= n) {
        const auto k = table_.size();
        table_.push_back(std::make_shared<const IntPoly>(lucas_step(*table_[k - 1], *table_[k - 2])));
      }
    }
    return std::shared_lock(mutex_);
  }

  std::shared_mutex mutex_;
  std::vector<std::shared_ptr<const IntPoly>> table_;
};

LucasTable& lucas_table() {
  static LucasTable instance;
  return instance;
}

constexpr std::array<int, 5> kPeriods{1, 6, 4, 3, 2};
constexpr std::array<std::array<long, 6>, 5> kSpreadTables{{
    {0},
    {0, 1, 3, 4, 3, 1},
    {0, 2, 4, 2},
    {0, 3, 3},
    {0, 4},
}};

}  // namespace

IntPoly lucas(std::uint64_t n) { return lucas_table().get(n); }

mpz_class lucas_value(std::uint64_t n, long y) {
  mpz_class prev2 = 2, prev = y;
  if (n == 0) return prev2;
  for (std::uint64_t k = 2; k <= n; ++k) {
    mpz_class next = y * prev - prev2;
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

IntPoly spread(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("spread: n must be >= 1");
  return IntPoly{2} - compose_linear(lucas(n), 2, -1);
}

int spread_period(int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("spread_period: k must be in {0..4}");
  return kPeriods[static_cast<std::size_t>(k)];
}

long spread_value(std::uint64_t n, int k) {
  const auto period = static_cast<std::uint64_t>(spread_period(k));
  return kSpreadTables[static_cast<std::size_t>(k)][n % period];
}

LucasCoeffs palindromic_to_lucas(const IntPoly& p) {
  if (p.is_zero() || *p.degree() % 2 != 0) {
    throw std::invalid_argument("palindromic_to_lucas: degree must be even");
  }
  if (!is_palindromic(p)) throw std::invalid_argument("palindromic_to_lucas: polynomial is not palindromic");
  const std::size_t m = *p.degree() / 2;
  LucasCoeffs out;
  out.c.assign(p.coeffs().begin() + static_cast<std::ptrdiff_t>(m), p.coeffs().end());
  return out;
}

IntPoly lucas_to_palindromic(const LucasCoeffs& lc) {
  if (lc.c.empty()) return {};
  const std::size_t m = lc.c.size() - 1;
  std::vector<mpz_class> cs(2 * m + 1);
  cs[m] = lc.c[0];
  for (std::size_t k = 1; k <= m; ++k) {
    cs[m + k] = lc.c[k];
    cs[m - k] = lc.c[k];
  }
  return IntPoly(std::move(cs));
}

IntPoly lucas_combination(const LucasCoeffs& lc) {
  if (lc.c.empty()) return {};
  std::vector<mpz_class> acc(lc.c.size());
  acc[0] = lc.c[0];
  for (std::size_t k = 1; k < lc.c.size(); ++k) {
    if (lc.c[k] == 0) continue;
    const IntPoly lk = lucas(k);
    for (std::size_t j = 0; j < lk.size(); ++j) {
      mpz_addmul(acc[j].get_mpz_t(), lc.c[k].get_mpz_t(), lk.coeffs()[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(acc));
}

namespace {

// c[0] + sum_{k>=1} c[k] L_k(y) over a contiguous coefficient range.
mpz_class lucas_sum(const mpz_class* c, std::size_t count, long y) {
  if (count == 0) return 0;
  mpz_class acc = c[0];
  if (y >= -2 && y <= 2) {
    // |L_k(y)| <= 2 on this range, so the recurrence stays in a long.
    long prev2 = 2, prev = y;
    for (std::size_t k = 1; k < count; ++k) {
      if (k >= 2) {
        const long next = y * prev - prev2;
        prev2 = prev;
        prev = next;
      }
      if (prev > 0) {
        mpz_addmul_ui(acc.get_mpz_t(), c[k].get_mpz_t(), static_cast<unsigned long>(prev));
      } else if (prev < 0) {
        mpz_submul_ui(acc.get_mpz_t(), c[k].get_mpz_t(), static_cast<unsigned long>(-prev));
      }
    }
    return acc;
  }
  mpz_class prev2 = 2, prev = y;
  for (std::size_t k = 1; k < count; ++k) {
    if (k >= 2) {
      mpz_class next = y * prev - prev2;
      prev2 = std::move(prev);
      prev = std::move(next);
    }
    mpz_addmul(acc.get_mpz_t(), c[k].get_mpz_t(), prev.get_mpz_t());
  }
  return acc;
}

}  // namespace

mpz_class lucas_combination_value(const LucasCoeffs& lc, long y) {
  return lucas_sum(lc.c.data(), lc.c.size(), y);
}

mpz_class palindromic_lucas_value(const IntPoly& p, long y) {
  if (p.is_zero() || *p.degree() % 2 != 0) {
    throw std::invalid_argument("palindromic_lucas_value: degree must be even");
  }
  if (!is_palindromic(p)) throw std::invalid_argument("palindromic_lucas_value: polynomial is not palindromic");
  const std::size_t m = *p.degree() / 2;
  return lucas_sum(p.coeffs().data() + m, m + 1, y);
}

}  // namespace specpoly
