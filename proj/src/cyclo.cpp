#include "planarlab/cyclo.hpp"

#include <algorithm>

namespace planarlab {

CycVec::CycVec(unsigned p) : p_(p), counts_(p) {}

CycVec::CycVec(unsigned p, std::vector<BigInt> counts) : p_(p), counts_(std::move(counts)) {
  if (counts_.size() != p_) throw Error(ErrorCode::LengthMismatch, "CycVec needs exactly p coefficients");
}

CycVec CycVec::rotated(unsigned shift) const {
  std::vector<BigInt> out(p_);
  for (unsigned j = 0; j < p_; ++j) out[(j + shift) % p_] = counts_[j];
  return {p_, std::move(out)};
}

CycVec CycVec::operator-(const CycVec& o) const {
  if (p_ != o.p_) throw Error(ErrorCode::LengthMismatch, "CycVec primes differ");
  std::vector<BigInt> out(p_);
  for (unsigned j = 0; j < p_; ++j) out[j] = counts_[j] - o.counts_[j];
  return {p_, std::move(out)};
}

bool operator==(const CycVec& a, const CycVec& b) {
  if (a.p_ != b.p_) return false;
  const CycVec d = a - b;
  return std::all_of(d.counts_.begin(), d.counts_.end(), [&](const BigInt& v) { return v == d.counts_[0]; });
}

CycVec char_sum(const Field& field, const Poly& f) {
  require_same_field(field, f.field());
  std::vector<BigInt> counts(field.p());
  for (const Elem v : value_table(f).values) ++counts[field.trace(v)];
  return {field.p(), std::move(counts)};
}

MagSqResult mag_sq(const CycVec& v) {
  const unsigned p = v.p();
  MagSqResult out;
  out.autocorrelation.assign(p, 0);
  for (unsigned m = 0; m < p; ++m)
    for (unsigned j = 0; j < p; ++j) out.autocorrelation[m] += v[j] * v[(j + m) % p];
  const auto& d = out.autocorrelation;
  out.is_rational_integer = std::all_of(d.begin() + 1, d.end(), [&](const BigInt& x) { return x == d[1]; });
  if (out.is_rational_integer) out.value = p > 1 ? d[0] - d[1] : d[0];
  return out;
}

CycVec phase_inner_counts(std::span<const std::uint16_t> e1, std::span<const std::uint16_t> e2, unsigned p) {
  if (e1.size() != e2.size()) throw Error(ErrorCode::LengthMismatch, "phase tables differ in length");
  std::vector<std::uint64_t> hist(p, 0);
  for (std::size_t x = 0; x < e1.size(); ++x) ++hist[(e2[x] + p - e1[x]) % p];
  std::vector<BigInt> counts(hist.begin(), hist.end());
  return {p, std::move(counts)};
}

}  // namespace planarlab
