#pragma once

// Polynomial functions over GF(q): a sparse exponent -> coefficient map kept
// in formal (unreduced) form until reduce() is called explicitly.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planarlab/field.hpp"

namespace planarlab {

/// Formal degree. The zero polynomial has no numeric degree; callers test
/// is_zero() (or !has_value()) instead of comparing against a sentinel.
using Degree = std::optional<std::uint64_t>;

class Poly {
 public:
  using Terms = std::map<std::uint64_t, Elem>;

  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, Terms terms);

  static Poly monomial(const Field& field, std::uint64_t exponent, Elem coeff = 1);
  static Poly constant(const Field& field, Elem value);

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Degree degree() const noexcept;
  Elem coeff(std::uint64_t exponent) const noexcept;

  /// Adds c * x^exponent, dropping the term if it cancels.
  void add_term(std::uint64_t exponent, Elem c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly scaled(Elem c) const;

  /// Canonical text, terms in decreasing exponent order ("3*x^2 + 3*x + 1").
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  Terms terms_;
};

/// f evaluated at every element, indexed by encoding.
struct ValueTable {
  Field field;
  std::vector<Elem> values;

  Elem operator[](Elem x) const noexcept { return values[x]; }
  std::size_t size() const noexcept { return values.size(); }
};

/// Parses `term ('+' term)*`; like terms are combined, exponents kept as written.
Poly parse_poly(std::string_view text, const Field& field);

/// Rewrites every exponent e >= 1 to ((e - 1) mod (q - 1)) + 1.
Poly reduce(const Poly& f);

Elem eval(const Poly& f, Elem x);
FieldElement eval(const Poly& f, const FieldElement& x);
ValueTable value_table(const Poly& f);

/// Formal f(x + a) - f(x). For a == 0 the result is the zero polynomial and
/// *degenerate (when given) is set.
Poly delta(const Poly& f, const FieldElement& a, bool* degenerate = nullptr);

/// Table form: out[x] = T[x + a] - T[x].
std::vector<Elem> delta_table(const Field& field, std::span<const Elem> table, Elem a);

/// f(x + a + b) - f(x + b) - f(x + a) + f(x).
Poly double_delta(const Poly& f, const FieldElement& a, const FieldElement& b);

/// f(s*x + t), expanded. Throws ZeroScale for s == 0.
Poly shift_scale(const Poly& f, const FieldElement& s, const FieldElement& t);

/// For n = p^s * m with gcd(m, p) = 1, returns p^s * (m - 1).
std::uint64_t predicted_delta_degree(std::uint64_t n, unsigned p);

/// Every n with predicted_delta_degree(n, p) == p^s * l: the values
/// p^t (p^(s-t) l + 1) for 0 <= t <= s, minus t = s when p divides l + 1.
std::set<std::uint64_t> preimage_degrees(unsigned s, std::uint64_t l, unsigned p);

}  // namespace planarlab
