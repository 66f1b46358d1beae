#pragma once

// Binomial coefficients modulo a prime via Lucas' digit-domination rule.

#include <cstdint>
#include <vector>

namespace planarlab {

bool is_prime(std::uint64_t n) noexcept;

/// Base-p expansion of a non-negative integer, least significant digit first.
struct BasePDigits {
  std::uint64_t value = 0;
  unsigned p = 0;
  std::vector<unsigned> digits;
};

BasePDigits base_p_digits(std::uint64_t value, unsigned p);

/// Small binomials binom(a, b) mod p for 0 <= a, b < p, precomputed once.
/// Queries on arbitrary n, k multiply one table entry per base-p digit.
class LucasTable {
 public:
  explicit LucasTable(unsigned p);

  unsigned p() const noexcept { return p_; }

  unsigned small(unsigned n, unsigned k) const noexcept {
    return k > n ? 0u : table_[static_cast<std::size_t>(n) * p_ + k];
  }

  unsigned binom(std::uint64_t n, std::uint64_t k) const noexcept;

  /// Calls fn(k, binom(n,k) mod p) for every k with a nonzero residue, in
  /// ascending k. The number of calls is the product of (digit + 1) over the
  /// base-p digits of n, independent of the magnitude of n.
  template <class Fn>
  void for_each_nonzero(std::uint64_t n, Fn&& fn) const;

 private:
  unsigned p_;
  std::vector<unsigned> table_;
};

/// Shared per-prime table; built on first use and immutable afterwards.
const LucasTable& lucas_table(unsigned p);

unsigned binom_mod_p(std::uint64_t n, std::uint64_t k, unsigned p);

inline constexpr std::uint64_t kDefaultSupportBound = 1'000'000;

/// All k in [0, n] with binom(n, k) != 0 mod p, ascending.
std::vector<std::uint64_t> nonzero_support(std::uint64_t n, unsigned p,
                                           std::uint64_t bound = kDefaultSupportBound);

template <class Fn>
void LucasTable::for_each_nonzero(std::uint64_t n, Fn&& fn) const {
  std::vector<unsigned> top;
  std::vector<std::uint64_t> place;
  std::uint64_t weight = 1;
  for (std::uint64_t m = n; m > 0; m /= p_) {
    top.push_back(static_cast<unsigned>(m % p_));
    place.push_back(weight);
    if (m / p_ > 0) weight *= p_;
  }
  // Mixed-radix odometer over digit vectors dominated by n's digits; the
  // low digit turns fastest, so k increases monotonically.
  std::vector<unsigned> cur(top.size(), 0);
  std::uint64_t k = 0;
  while (true) {
    unsigned residue = 1;
    for (std::size_t i = 0; i < top.size(); ++i) residue = residue * small(top[i], cur[i]) % p_;
    fn(k, residue);
    std::size_t i = 0;
    while (i < top.size() && cur[i] == top[i]) {
      k -= static_cast<std::uint64_t>(cur[i]) * place[i];
      cur[i] = 0;
      ++i;
    }
    if (i == top.size()) break;
    ++cur[i];
    k += place[i];
  }
}

}  // namespace planarlab
