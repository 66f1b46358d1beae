#pragma once

// Permutation / additive / planar / Alltop predicates on value tables, the
// Dembowski-Ostrom decomposition, and the planarity-preserving transforms.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "planarlab/polyfun.hpp"

namespace planarlab {

/// First violation found, in the fixed search order (a ascending, then b,
/// then x). Unused coordinates are left at zero.
struct Witness {
  Elem a = 0;
  Elem b = 0;
  Elem x = 0;
  Elem x2 = 0;
};

/// Reusable scratch space for classifying many tables over one field. Not
/// thread-safe; give each worker its own instance.
class TableClassifier {
 public:
  explicit TableClassifier(Field field);

  const Field& field() const noexcept { return field_; }

  /// Collision (x, x2) with x < x2 and T[x] == T[x2].
  std::optional<Witness> permutation_violation(std::span<const Elem> table);
  /// (a, x, x2) with Delta_a T[x] == Delta_a T[x2].
  std::optional<Witness> planar_violation(std::span<const Elem> table);
  /// (a, b, x, x2): Delta_a T is not planar because its b-difference collides.
  std::optional<Witness> alltop_violation(std::span<const Elem> table);

  bool is_permutation(std::span<const Elem> table) { return !permutation_violation(table); }
  bool is_planar(std::span<const Elem> table) { return !planar_violation(table); }
  bool is_alltop(std::span<const Elem> table) { return !alltop_violation(table); }

 private:
  void check(std::span<const Elem> table) const;
  // True when x -> src[x + b] - src[x] is a bijection; otherwise fills w.
  bool difference_bijective(std::span<const Elem> src, Elem b, Witness& w);

  Field field_;
  std::vector<std::uint32_t> seen_;  // generation stamps
  std::vector<Elem> first_;          // x that produced each stamped value
  std::vector<Elem> diff_;
  std::uint32_t stamp_ = 0;
};

bool is_permutation(const Poly& f);
/// Exhaustive f(x + y) == f(x) + f(y) over all q^2 pairs.
bool is_additive_function(const Poly& f);
/// First pair (x, x2) with f(x + x2) != f(x) + f(x2).
std::optional<Witness> additive_violation(const Poly& f);
/// Exponents all powers of p and no constant term (after reduction).
bool is_additive_syntactic(const Poly& f);
bool is_planar(const Poly& f);
bool is_alltop(const Poly& f);

/// x^(p^k + 1) is planar on GF(p^r) iff r / gcd(r, k) is odd.
bool is_do_monomial_planar(unsigned p, unsigned r, unsigned k);

struct DODecomposition {
  unsigned k;
  FieldElement alpha;
  Poly additive_part;
  FieldElement constant;

  /// alpha * x^(p^k + 1) + additive_part + constant.
  Poly reconstruct() const;
};

/// Splits a reduced g into alpha * x^(p^k+1) + additive + constant. Any shift
/// beta inside alpha (x + beta)^(p^k+1) lands in the additive and constant
/// parts and is not recovered.
std::optional<DODecomposition> do_decompose(const Poly& g);

/// reduce(c * f(s*x + t) + M(x) + d). Throws ZeroScale or NonAdditiveM.
Poly apply_equiv_transform(const Poly& f, const FieldElement& c, const FieldElement& s,
                           const FieldElement& t, const Poly& M, const FieldElement& d);

/// reduce(f) without its additive terms and constant.
Poly strip_additive_and_constant(const Poly& f);

/// reduce(f) stripped of additive terms and constant has degree exactly 3.
bool is_cubic_equivalent(const Poly& f);

/// Every Delta_a f (a != 0), reduced, decomposes as a DO monomial plus
/// additive and constant parts. Throws NotAlltop if f is not Alltop.
bool alltop_in_do_class(const Poly& f);

}  // namespace planarlab
