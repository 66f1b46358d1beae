#include "planarlab/binom.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "planarlab/error.hpp"

namespace planarlab {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

BasePDigits base_p_digits(std::uint64_t value, unsigned p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "base must be at least 2");
  BasePDigits out{value, p, {}};
  for (std::uint64_t m = value; m > 0; m /= p) out.digits.push_back(static_cast<unsigned>(m % p));
  return out;
}

LucasTable::LucasTable(unsigned p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  table_.assign(static_cast<std::size_t>(p) * p, 0);
  for (unsigned n = 0; n < p; ++n) {
    table_[static_cast<std::size_t>(n) * p] = 1;
    for (unsigned k = 1; k <= n; ++k) {
      const unsigned left = table_[static_cast<std::size_t>(n - 1) * p + k - 1];
      const unsigned up = k < n ? table_[static_cast<std::size_t>(n - 1) * p + k] : 0;
      table_[static_cast<std::size_t>(n) * p + k] = (left + up) % p;
    }
  }
}

unsigned LucasTable::binom(std::uint64_t n, std::uint64_t k) const noexcept {
  if (k > n) return 0;
  unsigned residue = 1;
  while (k > 0 || n > 0) {
    const auto a = static_cast<unsigned>(n % p_);
    const auto b = static_cast<unsigned>(k % p_);
    if (b > a) return 0;
    residue = residue * small(a, b) % p_;
    n /= p_;
    k /= p_;
  }
  return residue;
}

const LucasTable& lucas_table(unsigned p) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<const LucasTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = std::make_unique<const LucasTable>(p);
  return *slot;
}

unsigned binom_mod_p(std::uint64_t n, std::uint64_t k, unsigned p) {
  return lucas_table(p).binom(n, k);
}

std::vector<std::uint64_t> nonzero_support(std::uint64_t n, unsigned p, std::uint64_t bound) {
  if (n > bound)
    throw Error(ErrorCode::BoundExceeded,
                "n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<std::uint64_t> out;
  lucas_table(p).for_each_nonzero(n, [&](std::uint64_t k, unsigned) { out.push_back(k); });
  return out;
}

}  // namespace planarlab
