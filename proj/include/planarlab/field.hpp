#pragma once

// GF(p^r) in a polynomial basis over Z_p with a canonical irreducible modulus.
//
// Elements are identified by their encoding sum(c_i * p^i) in [0, q), where
// c_i is the coefficient of alpha^i and alpha is a root of the modulus. Hot
// loops work on raw encodings (Elem) through the Field handle; FieldElement is
// the checked value type for everything else.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "planarlab/binom.hpp"
#include "planarlab/error.hpp"

namespace planarlab {

using Elem = std::uint32_t;

class FieldElement;

namespace detail {
struct FieldData;
}

class Field {
 public:
  static constexpr std::uint64_t kDefaultBound = 10'000;

  unsigned p() const noexcept;
  unsigned r() const noexcept;
  Elem q() const noexcept;

  /// Monic modulus, low-to-high, length r + 1.
  const std::vector<unsigned>& modulus() const noexcept;
  std::string modulus_string() const;

  /// The smallest-encoding generator of the multiplicative group.
  Elem primitive() const noexcept;
  const LucasTable& lucas() const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t n) const noexcept;
  Elem frobenius(Elem a, std::uint64_t k) const noexcept;
  unsigned trace(Elem a) const noexcept;

  std::vector<unsigned> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const unsigned> coeffs) const;

  /// Checked conversion from an encoding.
  FieldElement element(Elem encoding) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// All q elements in increasing encoding.
  std::vector<FieldElement> elements() const;

  bool contains(Elem encoding) const noexcept { return encoding < q(); }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p() == b.p() && a.r() == b.r();
  }

 private:
  friend Field make_field(unsigned p, unsigned r, std::uint64_t bound);
  explicit Field(std::shared_ptr<const detail::FieldData> data) : d_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> d_;
};

/// Builds GF(p^r). Throws NotPrime, CharTwoUnsupported or FieldTooLarge.
Field make_field(unsigned p, unsigned r, std::uint64_t bound = Field::kDefaultBound);

/// Finds the canonical modulus by increasing-encoding scan; exposed for tests.
std::vector<unsigned> canonical_modulus(unsigned p, unsigned r);

class FieldElement {
 public:
  FieldElement(Field field, Elem encoding);

  const Field& field() const noexcept { return field_; }
  Elem encoding() const noexcept { return enc_; }
  std::vector<unsigned> coeffs() const { return field_.coeffs(enc_); }
  bool is_zero() const noexcept { return enc_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(enc_)}; }

  FieldElement inv() const { return {field_, field_.inv(enc_)}; }
  FieldElement pow(std::uint64_t n) const { return {field_, field_.pow(enc_, n)}; }
  FieldElement frobenius(std::uint64_t k) const { return {field_, field_.frobenius(enc_, k)}; }
  unsigned trace() const noexcept { return field_.trace(enc_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.enc_ == b.enc_;
  }

 private:
  Field field_;
  Elem enc_;
};

/// Throws FieldMismatch unless both handles describe the same field.
void require_same_field(const Field& a, const Field& b);

}  // namespace planarlab
