#pragma once

// Exact elements of Z[w], w = exp(2*pi*i/p), as coefficient vectors on
// 1, w, ..., w^(p-1). The only rational relation among these powers is
// 1 + w + ... + w^(p-1) = 0, so two vectors name the same number exactly when
// their difference is constant across all p entries.

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "planarlab/polyfun.hpp"

namespace planarlab {

using BigInt = boost::multiprecision::cpp_int;

class CycVec {
 public:
  explicit CycVec(unsigned p);
  CycVec(unsigned p, std::vector<BigInt> counts);

  unsigned p() const noexcept { return p_; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& operator[](std::size_t j) const { return counts_[j]; }

  /// Multiplication by w^shift.
  CycVec rotated(unsigned shift) const;
  CycVec operator-(const CycVec& o) const;

  friend bool operator==(const CycVec& a, const CycVec& b);

 private:
  unsigned p_;
  std::vector<BigInt> counts_;
};

struct MagSqResult {
  bool is_rational_integer = false;
  BigInt value;  // meaningful only when is_rational_integer
  std::vector<BigInt> autocorrelation;
};

/// counts_j = #{ x : tr(f(x)) = j }.
CycVec char_sum(const Field& field, const Poly& f);

/// |v|^2 computed exactly through the cyclic autocorrelation of the counts.
MagSqResult mag_sq(const CycVec& v);

/// counts_j = #{ x : e2[x] - e1[x] = j mod p }. Feeding the result to
/// mag_sq gives q^2 * |<v1|v2>|^2 for the corresponding phase vectors.
CycVec phase_inner_counts(std::span<const std::uint16_t> e1, std::span<const std::uint16_t> e2, unsigned p);

}  // namespace planarlab
