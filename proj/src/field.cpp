#include "planarlab/field.hpp"

#include <algorithm>
#include <sstream>

namespace planarlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::CharTwoUnsupported: return "CharTwoUnsupported";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::NonAdditiveM: return "NonAdditiveM";
    case ErrorCode::NotAlltop: return "NotAlltop";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

namespace {

// Dense polynomials over Z_p, low-to-high, used only while setting up a field.
using ZpPoly = std::vector<unsigned>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& monic, unsigned p) {
  trim(a);
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * monic[i]) % p;
    trim(a);
  }
  return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& monic, unsigned p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return zp_mod(std::move(prod), monic, p);
}

// Monic polynomial of the given degree whose lower coefficients are the base-p
// digits of code.
ZpPoly monic_from_code(std::uint64_t code, unsigned degree, unsigned p) {
  ZpPoly m(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i, code /= p) m[i] = static_cast<unsigned>(code % p);
  m[degree] = 1;
  return m;
}

bool is_irreducible(const ZpPoly& f, unsigned p) {
  const unsigned r = static_cast<unsigned>(f.size() - 1);
  std::uint64_t count = 1;
  for (unsigned d = 1; d <= r / 2; ++d) {
    count *= p;
    for (std::uint64_t code = 0; code < count; ++code)
      if (zp_mod(f, monic_from_code(code, d, p), p).empty()) return false;
  }
  return true;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

namespace detail {

struct FieldData {
  unsigned p = 0;
  unsigned r = 0;
  Elem q = 0;
  ZpPoly modulus;
  Elem primitive = 0;
  std::vector<Elem> exp;       // length 2(q-1): exp[i] = g^i
  std::vector<std::uint32_t> log;
  std::vector<Elem> neg;
  std::vector<std::uint8_t> trace;
  std::vector<std::uint16_t> add_table;  // q*q entries when q <= kAddTableMax
  LucasTable lucas;

  static constexpr Elem kAddTableMax = 4096;

  explicit FieldData(unsigned p_) : p(p_), lucas(p_) {}

  Elem add_digits(Elem a, Elem b) const noexcept {
    Elem out = 0;
    Elem place = 1;
    for (unsigned i = 0; i < r; ++i) {
      out += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  }

  ZpPoly to_poly(Elem a) const {
    ZpPoly out(r, 0);
    for (unsigned i = 0; i < r; ++i, a /= p) out[i] = a % p;
    trim(out);
    return out;
  }

  Elem from_poly(const ZpPoly& a) const {
    Elem out = 0;
    for (std::size_t i = a.size(); i-- > 0;) out = out * p + a[i];
    return out;
  }
};

}  // namespace detail

std::vector<unsigned> canonical_modulus(unsigned p, unsigned r) {
  if (r == 1) return {0, 1};
  std::uint64_t count = 1;
  for (unsigned i = 0; i < r; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    ZpPoly f = monic_from_code(code, r, p);
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");  // unreachable for prime p
}

Field make_field(unsigned p, unsigned r, std::uint64_t bound) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::CharTwoUnsupported, "characteristic 2 is not supported");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > bound)
      throw Error(ErrorCode::FieldTooLarge, std::to_string(p) + "^" + std::to_string(r) +
                                                " exceeds bound " + std::to_string(bound));
  }

  auto d = std::make_shared<detail::FieldData>(p);
  d->r = r;
  d->q = static_cast<Elem>(q);
  d->modulus = canonical_modulus(p, r);

  const Elem order = d->q - 1;
  for (Elem g = 1; g < d->q && d->primitive == 0; ++g) {
    const ZpPoly gp = d->to_poly(g);
    ZpPoly acc = gp;
    Elem k = 1;
    while (!(acc.size() == 1 && acc[0] == 1)) {
      acc = zp_mulmod(acc, gp, d->modulus, p);
      ++k;
    }
    if (k == order) d->primitive = g;
  }

  d->exp.resize(2 * static_cast<std::size_t>(order));
  d->log.assign(d->q, 0);
  {
    const ZpPoly gp = d->to_poly(d->primitive);
    ZpPoly acc{1};
    for (Elem i = 0; i < order; ++i) {
      const Elem e = d->from_poly(acc);
      d->exp[i] = e;
      d->exp[i + order] = e;
      d->log[e] = i;
      acc = zp_mulmod(acc, gp, d->modulus, p);
    }
  }

  d->neg.resize(d->q);
  for (Elem a = 0; a < d->q; ++a) {
    Elem out = 0;
    Elem place = 1;
    for (Elem m = a; m > 0; m /= p, place *= p) out += ((p - m % p) % p) * place;
    d->neg[a] = out;
  }

  if (d->q <= detail::FieldData::kAddTableMax) {
    d->add_table.resize(static_cast<std::size_t>(d->q) * d->q);
    for (Elem a = 0; a < d->q; ++a)
      for (Elem b = 0; b < d->q; ++b)
        d->add_table[static_cast<std::size_t>(a) * d->q + b] =
            static_cast<std::uint16_t>(d->add_digits(a, b));
  }

  Field field(d);
  d->trace.resize(d->q);
  for (Elem a = 0; a < d->q; ++a) {
    Elem sum = 0;
    Elem conj = a;
    for (unsigned i = 0; i < r; ++i) {
      sum = field.add(sum, conj);
      conj = field.pow(conj, p);
    }
    // The trace always lands in the prime subfield, whose encodings are [0, p).
    d->trace[a] = static_cast<std::uint8_t>(sum);
  }
  return field;
}

unsigned Field::p() const noexcept { return d_->p; }
unsigned Field::r() const noexcept { return d_->r; }
Elem Field::q() const noexcept { return d_->q; }
const std::vector<unsigned>& Field::modulus() const noexcept { return d_->modulus; }
Elem Field::primitive() const noexcept { return d_->primitive; }
const LucasTable& Field::lucas() const noexcept { return d_->lucas; }

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d_->modulus.size(); i-- > 0;) {
    const unsigned c = d_->modulus[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (!d_->add_table.empty()) return d_->add_table[static_cast<std::size_t>(a) * d_->q + b];
  return d_->add_digits(a, b);
}

Elem Field::neg(Elem a) const noexcept { return d_->neg[a]; }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return d_->exp[d_->log[a] + d_->log[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const Elem order = d_->q - 1;
  return d_->exp[(order - d_->log[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t n) const noexcept {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = d_->q - 1;
  return d_->exp[static_cast<std::size_t>(d_->log[a] * (n % order) % order)];
}

Elem Field::frobenius(Elem a, std::uint64_t k) const noexcept {
  if (a == 0) return 0;
  const std::uint64_t order = d_->q - 1;
  const std::uint64_t e = powmod(d_->p, k, order);
  return d_->exp[static_cast<std::size_t>(d_->log[a] * e % order)];
}

unsigned Field::trace(Elem a) const noexcept { return d_->trace[a]; }

std::vector<unsigned> Field::coeffs(Elem a) const {
  std::vector<unsigned> out(d_->r, 0);
  for (unsigned i = 0; i < d_->r; ++i, a /= d_->p) out[i] = a % d_->p;
  return out;
}

Elem Field::from_coeffs(std::span<const unsigned> coeffs) const {
  if (coeffs.size() != d_->r)
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(d_->r) + " coefficients");
  Elem out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= d_->p) throw Error(ErrorCode::CoefficientOutOfRange, "coefficient not below p");
    out = out * d_->p + coeffs[i];
  }
  return out;
}

FieldElement Field::element(Elem encoding) const { return FieldElement(*this, encoding); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (Elem e = 0; e < q(); ++e) out.emplace_back(*this, e);
  return out;
}

FieldElement::FieldElement(Field field, Elem encoding) : field_(std::move(field)), enc_(encoding) {
  if (!field_.contains(enc_))
    throw Error(ErrorCode::CoefficientOutOfRange,
                "encoding " + std::to_string(enc_) + " outside [0, " + std::to_string(field_.q()) + ")");
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b))
    throw Error(ErrorCode::FieldMismatch, "GF(" + std::to_string(a.p()) + "^" + std::to_string(a.r()) +
                                              ") vs GF(" + std::to_string(b.p()) + "^" +
                                              std::to_string(b.r()) + ")");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.add(enc_, o.enc_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.sub(enc_, o.enc_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.mul(enc_, o.enc_)};
}

}  // namespace planarlab
