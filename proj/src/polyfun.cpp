#include "planarlab/polyfun.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace planarlab {

Poly::Poly(Field field, Terms terms) : field_(std::move(field)) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Poly Poly::monomial(const Field& field, std::uint64_t exponent, Elem coeff) {
  Poly out(field);
  out.add_term(exponent, coeff);
  return out;
}

Poly Poly::constant(const Field& field, Elem value) { return monomial(field, 0, value); }

Degree Poly::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Elem Poly::coeff(std::uint64_t exponent) const noexcept {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(std::uint64_t exponent, Elem c) {
  if (!field_.contains(c))
    throw Error(ErrorCode::CoefficientOutOfRange, "coefficient " + std::to_string(c));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(field_, o.field_);
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  require_same_field(field_, o.field_);
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, field_.neg(c));
  return out;
}

Poly Poly::scaled(Elem c) const {
  Poly out(field_);
  for (const auto& [e, v] : terms_) out.add_term(e, field_.mul(v, c));
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field) : field_(field) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  Poly parse() {
    Poly out(field_);
    if (s_.empty()) fail("empty polynomial");
    parse_term(out);
    while (pos_ < s_.size()) {
      expect('+');
      parse_term(out);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::uint64_t x_power() {
    expect('x');
    if (!peek('^')) return 1;
    ++pos_;
    return number();
  }

  void parse_term(Poly& out) {
    if (peek('x')) {
      out.add_term(x_power(), 1);
      return;
    }
    const std::uint64_t c = number();
    if (c >= field_.q())
      throw Error(ErrorCode::CoefficientOutOfRange,
                  "coefficient " + std::to_string(c) + " outside [0, " + std::to_string(field_.q()) + ")");
    if (!peek('*')) {
      out.add_term(0, static_cast<Elem>(c));
      return;
    }
    ++pos_;
    out.add_term(x_power(), static_cast<Elem>(c));
  }

  const Field& field_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Field& field) { return PolyParser(text, field).parse(); }

Poly reduce(const Poly& f) {
  const std::uint64_t order = f.field().q() - 1;
  Poly out(f.field());
  for (const auto& [e, c] : f.terms()) out.add_term(e == 0 ? 0 : (e - 1) % order + 1, c);
  return out;
}

Elem eval(const Poly& f, Elem x) {
  const Field& field = f.field();
  if (f.is_zero()) return 0;
  // Horner over the sparse terms, descending, bridging exponent gaps with pow.
  auto it = f.terms().rbegin();
  Elem acc = it->second;
  std::uint64_t prev = it->first;
  for (++it; it != f.terms().rend(); ++it) {
    acc = field.add(field.mul(acc, field.pow(x, prev - it->first)), it->second);
    prev = it->first;
  }
  return field.mul(acc, field.pow(x, prev));
}

FieldElement eval(const Poly& f, const FieldElement& x) {
  require_same_field(f.field(), x.field());
  return {f.field(), eval(f, x.encoding())};
}

ValueTable value_table(const Poly& f) {
  const Field& field = f.field();
  ValueTable out{field, std::vector<Elem>(field.q(), 0)};
  for (const auto& [e, c] : f.terms())
    for (Elem x = 0; x < field.q(); ++x) out.values[x] = field.add(out.values[x], field.mul(c, field.pow(x, e)));
  return out;
}

Poly delta(const Poly& f, const FieldElement& a, bool* degenerate) {
  require_same_field(f.field(), a.field());
  const Field& field = f.field();
  if (degenerate) *degenerate = a.is_zero();
  Poly out(field);
  if (a.is_zero()) return out;
  for (const auto& [n, c] : f.terms()) {
    // (x + a)^n - x^n: every k < n with binom(n, k) != 0 mod p.
    field.lucas().for_each_nonzero(n, [&](std::uint64_t k, unsigned binom) {
      if (k == n) return;
      out.add_term(k, field.mul(c, field.mul(binom, field.pow(a.encoding(), n - k))));
    });
  }
  return out;
}

std::vector<Elem> delta_table(const Field& field, std::span<const Elem> table, Elem a) {
  if (table.size() != field.q()) throw Error(ErrorCode::LengthMismatch, "value table length differs from q");
  std::vector<Elem> out(table.size());
  for (Elem x = 0; x < field.q(); ++x) out[x] = field.sub(table[field.add(x, a)], table[x]);
  return out;
}

Poly double_delta(const Poly& f, const FieldElement& a, const FieldElement& b) {
  return delta(delta(f, a), b);
}

Poly shift_scale(const Poly& f, const FieldElement& s, const FieldElement& t) {
  require_same_field(f.field(), s.field());
  require_same_field(f.field(), t.field());
  if (s.is_zero()) throw Error(ErrorCode::ZeroScale, "scale factor must be nonzero");
  const Field& field = f.field();
  Poly out(field);
  for (const auto& [n, c] : f.terms()) {
    field.lucas().for_each_nonzero(n, [&](std::uint64_t k, unsigned binom) {
      const Elem coeff = field.mul(field.pow(s.encoding(), k), field.pow(t.encoding(), n - k));
      out.add_term(k, field.mul(c, field.mul(binom, coeff)));
    });
  }
  return out;
}

std::uint64_t predicted_delta_degree(std::uint64_t n, unsigned p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  std::uint64_t prime_power = 1;
  while (n % p == 0) {
    n /= p;
    prime_power *= p;
  }
  return prime_power * (n - 1);
}

std::set<std::uint64_t> preimage_degrees(unsigned s, std::uint64_t l, unsigned p) {
  if (l == 0 || l % p == 0) throw Error(ErrorCode::InvalidArgument, "l must be positive and prime to p");
  std::vector<std::uint64_t> powers(s + 1, 1);
  for (unsigned i = 1; i <= s; ++i) powers[i] = powers[i - 1] * p;
  std::set<std::uint64_t> out;
  for (unsigned t = 0; t <= s; ++t) {
    const std::uint64_t m = powers[s - t] * l + 1;
    if (m % p != 0) out.insert(powers[t] * m);
  }
  return out;
}

}  // namespace planarlab
