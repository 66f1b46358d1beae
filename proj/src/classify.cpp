#include "planarlab/classify.hpp"

#include <limits>
#include <numeric>

namespace planarlab {

namespace {

bool is_power_of(std::uint64_t e, unsigned p) {
  if (e == 0) return false;
  while (e % p == 0) e /= p;
  return e == 1;
}

// k with p^k + 1 == e, if any.
std::optional<unsigned> do_exponent_k(std::uint64_t e, unsigned p) {
  if (e < 2 || !is_power_of(e - 1, p)) return std::nullopt;
  unsigned k = 0;
  for (std::uint64_t m = e - 1; m > 1; m /= p) ++k;
  return k;
}

}  // namespace

TableClassifier::TableClassifier(Field field)
    : field_(std::move(field)), seen_(field_.q(), 0), first_(field_.q(), 0), diff_(field_.q(), 0) {}

void TableClassifier::check(std::span<const Elem> table) const {
  if (table.size() != field_.q()) throw Error(ErrorCode::LengthMismatch, "value table length differs from q");
}

bool TableClassifier::difference_bijective(std::span<const Elem> src, Elem b, Witness& w) {
  if (stamp_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 0;
  }
  ++stamp_;
  const Elem q = field_.q();
  for (Elem x = 0; x < q; ++x) {
    const Elem v = field_.sub(src[field_.add(x, b)], src[x]);
    if (seen_[v] == stamp_) {
      w.x = first_[v];
      w.x2 = x;
      return false;
    }
    seen_[v] = stamp_;
    first_[v] = x;
  }
  return true;
}

std::optional<Witness> TableClassifier::permutation_violation(std::span<const Elem> table) {
  check(table);
  if (stamp_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 0;
  }
  ++stamp_;
  for (Elem x = 0; x < field_.q(); ++x) {
    const Elem v = table[x];
    if (seen_[v] == stamp_) return Witness{0, 0, first_[v], x};
    seen_[v] = stamp_;
    first_[v] = x;
  }
  return std::nullopt;
}

std::optional<Witness> TableClassifier::planar_violation(std::span<const Elem> table) {
  check(table);
  Witness w;
  for (Elem a = 1; a < field_.q(); ++a) {
    if (!difference_bijective(table, a, w)) {
      w.a = a;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> TableClassifier::alltop_violation(std::span<const Elem> table) {
  check(table);
  const Elem q = field_.q();
  Witness w;
  for (Elem a = 1; a < q; ++a) {
    for (Elem x = 0; x < q; ++x) diff_[x] = field_.sub(table[field_.add(x, a)], table[x]);
    for (Elem b = 1; b < q; ++b) {
      if (!difference_bijective(diff_, b, w)) {
        w.a = a;
        w.b = b;
        return w;
      }
    }
  }
  return std::nullopt;
}

bool is_permutation(const Poly& f) {
  return TableClassifier(f.field()).is_permutation(value_table(f).values);
}

std::optional<Witness> additive_violation(const Poly& f) {
  const Field& field = f.field();
  const auto t = value_table(f);
  for (Elem x = 0; x < field.q(); ++x)
    for (Elem y = x; y < field.q(); ++y)
      if (t[field.add(x, y)] != field.add(t[x], t[y])) return Witness{0, 0, x, y};
  return std::nullopt;
}

bool is_additive_function(const Poly& f) { return !additive_violation(f); }

bool is_additive_syntactic(const Poly& f) {
  const Poly reduced = reduce(f);
  for (const auto& [e, c] : reduced.terms())
    if (!is_power_of(e, f.field().p())) return false;
  return true;
}

bool is_planar(const Poly& f) { return TableClassifier(f.field()).is_planar(value_table(f).values); }

bool is_alltop(const Poly& f) { return TableClassifier(f.field()).is_alltop(value_table(f).values); }

bool is_do_monomial_planar(unsigned p, unsigned r, unsigned k) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  return (r / std::gcd(r, k)) % 2 == 1;
}

Poly DODecomposition::reconstruct() const {
  const Field& field = alpha.field();
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i) e *= field.p();
  Poly out = additive_part;
  out.add_term(e + 1, alpha.encoding());
  out.add_term(0, constant.encoding());
  return out;
}

std::optional<DODecomposition> do_decompose(const Poly& g) {
  const Poly reduced = reduce(g);
  const Field& field = reduced.field();
  Poly additive(field);
  std::optional<std::pair<std::uint64_t, Elem>> rest;
  for (const auto& [e, c] : reduced.terms()) {
    if (e == 0) continue;
    if (is_power_of(e, field.p())) {
      additive.add_term(e, c);
      continue;
    }
    if (rest) return std::nullopt;
    rest.emplace(e, c);
  }
  if (!rest) return std::nullopt;
  const auto k = do_exponent_k(rest->first, field.p());
  if (!k) return std::nullopt;
  return DODecomposition{*k, field.element(rest->second), std::move(additive), field.element(reduced.coeff(0))};
}

Poly apply_equiv_transform(const Poly& f, const FieldElement& c, const FieldElement& s, const FieldElement& t,
                           const Poly& M, const FieldElement& d) {
  require_same_field(f.field(), c.field());
  require_same_field(f.field(), M.field());
  require_same_field(f.field(), d.field());
  if (c.is_zero()) throw Error(ErrorCode::ZeroScale, "outer scale must be nonzero");
  if (!is_additive_syntactic(M)) throw Error(ErrorCode::NonAdditiveM, M.to_string() + " is not additive");
  Poly out = shift_scale(f, s, t).scaled(c.encoding()) + M;
  out.add_term(0, d.encoding());
  return reduce(out);
}

Poly strip_additive_and_constant(const Poly& f) {
  const Poly reduced = reduce(f);
  Poly out(f.field());
  for (const auto& [e, c] : reduced.terms())
    if (e != 0 && !is_power_of(e, f.field().p())) out.add_term(e, c);
  return out;
}

bool is_cubic_equivalent(const Poly& f) {
  const Degree deg = strip_additive_and_constant(f).degree();
  return deg && *deg == 3;
}

bool alltop_in_do_class(const Poly& f) {
  if (!is_alltop(f)) throw Error(ErrorCode::NotAlltop, f.to_string() + " is not Alltop");
  const Field& field = f.field();
  for (Elem a = 1; a < field.q(); ++a)
    if (!do_decompose(reduce(delta(f, field.element(a))))) return false;
  return true;
}

}  // namespace planarlab
