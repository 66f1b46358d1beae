#include "planarlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <thread>

namespace planarlab {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Monomials: return "monomials";
    case FamilyKind::AllReduced: return "all-reduced";
    case FamilyKind::ShiftedCubics: return "shifted-cubics";
    case FamilyKind::DoMonomials: return "do-monomials";
  }
  return "unknown";
}

std::string_view to_string(SearchMode mode) noexcept { return mode == SearchMode::Planar ? "planar" : "alltop"; }

FamilyKind family_kind_from_string(std::string_view s) {
  for (auto k : {FamilyKind::Monomials, FamilyKind::AllReduced, FamilyKind::ShiftedCubics, FamilyKind::DoMonomials})
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(s) + "'");
}

SearchMode search_mode_from_string(std::string_view s) {
  if (s == "planar") return SearchMode::Planar;
  if (s == "alltop") return SearchMode::Alltop;
  throw Error(ErrorCode::InvalidArgument, "unknown search mode '" + std::string(s) + "'");
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t prime_power(unsigned p, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

// Builds candidate value tables straight from the family parameters, without
// going through Poly evaluation.
class CandidateTables {
 public:
  CandidateTables(const Field& field, const FamilySpec& family) : field_(field), family_(family), table_(field.q()) {
    if (family.kind == FamilyKind::AllReduced) {
      powers_.assign(static_cast<std::size_t>(family.max_deg) + 1, std::vector<Elem>(field.q()));
      for (unsigned i = 0; i <= family.max_deg; ++i)
        for (Elem x = 0; x < field.q(); ++x) powers_[i][x] = field.pow(x, i);
    }
    if (family.kind == FamilyKind::ShiftedCubics) {
      cubes_.resize(field.q());
      for (Elem x = 0; x < field.q(); ++x) cubes_[x] = field.pow(x, 3);
    }
  }

  std::span<const Elem> build(std::uint64_t index) {
    const Elem q = field_.q();
    switch (family_.kind) {
      case FamilyKind::Monomials:
        for (Elem x = 0; x < q; ++x) table_[x] = field_.pow(x, index + 2);
        break;
      case FamilyKind::DoMonomials: {
        const std::uint64_t n = prime_power(field_.p(), static_cast<unsigned>(index)) + 1;
        for (Elem x = 0; x < q; ++x) table_[x] = field_.pow(x, n);
        break;
      }
      case FamilyKind::ShiftedCubics:
        for (Elem x = 0; x < q; ++x) table_[x] = cubes_[field_.add(x, static_cast<Elem>(index))];
        break;
      case FamilyKind::AllReduced: {
        std::fill(table_.begin(), table_.end(), 0);
        std::uint64_t rest = index;
        for (unsigned i = 0; i <= family_.max_deg; ++i, rest /= q) {
          const auto c = static_cast<Elem>(rest % q);
          if (c == 0) continue;
          for (Elem x = 0; x < q; ++x) table_[x] = field_.add(table_[x], field_.mul(c, powers_[i][x]));
        }
        break;
      }
    }
    return table_;
  }

 private:
  const Field& field_;
  FamilySpec family_;
  std::vector<Elem> table_;
  std::vector<std::vector<Elem>> powers_;
  std::vector<Elem> cubes_;
};

}  // namespace

std::uint64_t family_cardinality(const Field& field, const FamilySpec& family) {
  switch (family.kind) {
    case FamilyKind::Monomials: return field.q() - 2;
    case FamilyKind::ShiftedCubics: return field.q();
    case FamilyKind::DoMonomials: return field.r();
    case FamilyKind::AllReduced: {
      std::uint64_t n = 1;
      for (unsigned i = 0; i <= family.max_deg; ++i) n = sat_mul(n, field.q());
      return n;
    }
  }
  return 0;
}

Poly family_candidate(const Field& field, const FamilySpec& family, std::uint64_t index) {
  if (index >= family_cardinality(field, family))
    throw Error(ErrorCode::InvalidArgument, "candidate index out of range");
  switch (family.kind) {
    case FamilyKind::Monomials: return Poly::monomial(field, index + 2);
    case FamilyKind::DoMonomials:
      return Poly::monomial(field, prime_power(field.p(), static_cast<unsigned>(index)) + 1);
    case FamilyKind::ShiftedCubics:
      return shift_scale(Poly::monomial(field, 3), field.one(), field.element(static_cast<Elem>(index)));
    case FamilyKind::AllReduced: {
      Poly out(field);
      std::uint64_t rest = index;
      for (unsigned i = 0; i <= family.max_deg; ++i, rest /= field.q())
        out.add_term(i, static_cast<Elem>(rest % field.q()));
      return out;
    }
  }
  return Poly(field);
}

SearchReport run_search(const Field& field, const FamilySpec& family, SearchMode mode, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t count = family_cardinality(field, family);
  if (count > options.budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(count) + " candidates exceed budget " +
                                               std::to_string(options.budget));
  const std::uint64_t q = field.q();
  const std::uint64_t per_candidate = mode == SearchMode::Planar ? q * q : q * q * q;
  if (sat_mul(count, per_candidate) > options.op_budget)
    throw Error(ErrorCode::BudgetExceeded, "estimated table operations exceed " + std::to_string(options.op_budget));

  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(count, 1)));
  std::vector<std::vector<std::uint64_t>> found(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = count * w / workers;
        const std::uint64_t hi = count * (w + 1) / workers;
        CandidateTables tables(field, family);
        TableClassifier classifier(field);
        for (std::uint64_t i = lo; i < hi; ++i) {
          const auto t = tables.build(i);
          const bool hit = mode == SearchMode::Planar ? classifier.is_planar(t) : classifier.is_alltop(t);
          if (hit) found[w].push_back(i);
        }
      });
    }
  }

  SearchReport report{field, family, mode, count, {}, 0.0, true};
  for (const auto& part : found)
    for (const auto i : part) report.hits.push_back({i, family_candidate(field, family, i)});
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SpotCheck spot_check(const SearchReport& report, double fraction, std::uint64_t seed) {
  SpotCheck out;
  if (report.tested == 0) return out;
  const auto wanted = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(static_cast<double>(report.tested) * fraction + 0.999999));
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < wanted; ++s) {
    const std::uint64_t i = rng() % report.tested;
    const Poly f = family_candidate(report.field, report.family, i);
    const bool expected = report.mode == SearchMode::Planar ? is_planar(f) : is_alltop(f);
    const bool reported = std::ranges::binary_search(report.hits, i, {}, &SearchHit::index);
    ++out.sampled;
    if (expected != reported) ++out.mismatches;
  }
  return out;
}

TheoremCheck verify_char3_theorem(const Field& field, const FamilySpec& family, const SearchOptions& options) {
  if (field.p() != 3) throw Error(ErrorCode::InvalidArgument, "characteristic-3 check needs p = 3");
  SearchReport report = run_search(field, family, SearchMode::Alltop, options);
  const bool holds = report.hits.empty();
  return {holds, std::move(report)};
}

DegreeTheoremReport verify_monomial_degree_theorem(const Field& field) {
  DegreeTheoremReport out;
  for (std::uint64_t n = 1; n < field.q(); ++n) {
    const Poly f = Poly::monomial(field, n);
    const std::uint64_t predicted = predicted_delta_degree(n, field.p());
    for (Elem a = 1; a < field.q(); ++a) {
      const Degree found = delta(f, field.element(a)).degree();
      ++out.checked;
      if (!found || *found != predicted) out.mismatches.push_back({n, a, found, predicted});
    }
  }
  out.holds = out.mismatches.empty();
  return out;
}

CubicScopeReport verify_cubic_scope(const Field& field, const FamilySpec& family, const SearchOptions& options) {
  if (field.p() < 5) throw Error(ErrorCode::CharacteristicTooSmall, "cubic scope check needs p >= 5");
  CubicScopeReport out{false, run_search(field, family, SearchMode::Alltop, options), {}};
  for (const auto& hit : out.search.hits) {
    const bool in_class = alltop_in_do_class(hit.poly);
    const bool cubic = is_cubic_equivalent(hit.poly);
    if (!in_class || !cubic) out.violations.push_back({hit.index, hit.poly, in_class, cubic});
  }
  out.holds = out.violations.empty();
  return out;
}

}  // namespace planarlab
