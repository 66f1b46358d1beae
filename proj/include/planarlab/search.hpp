#pragma once

// Exhaustive enumeration campaigns over families of candidate polynomials.
//
// Candidates are numbered 0..N-1 in a fixed order and classified from their
// value tables. Workers take contiguous index ranges; hits are merged by index,
// so reports do not depend on the worker count.

#include <cstdint>
#include <string>
#include <vector>

#include "planarlab/classify.hpp"

namespace planarlab {

enum class FamilyKind { Monomials, AllReduced, ShiftedCubics, DoMonomials };

/// monomials: x^n for n in [2, q-1].
/// all-reduced: every c_0 + c_1 x + ... + c_D x^D, index = sum c_i q^i.
/// shifted-cubics: (x + b)^3 for b ascending.
/// do-monomials: x^(p^k + 1) for k in [0, r).
struct FamilySpec {
  FamilyKind kind = FamilyKind::Monomials;
  unsigned max_deg = 0;  // all-reduced only
};

enum class SearchMode { Planar, Alltop };

std::string_view to_string(FamilyKind kind) noexcept;
std::string_view to_string(SearchMode mode) noexcept;
FamilyKind family_kind_from_string(std::string_view s);
SearchMode search_mode_from_string(std::string_view s);

struct SearchOptions {
  static constexpr std::uint64_t kDefaultBudget = 10'000'000;
  static constexpr std::uint64_t kDefaultOpBudget = 10'000'000'000ULL;

  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;        // candidates
  std::uint64_t op_budget = kDefaultOpBudget;   // estimated table operations
};

struct SearchHit {
  std::uint64_t index;
  Poly poly;
};

struct SearchReport {
  Field field;
  FamilySpec family;
  SearchMode mode;
  std::uint64_t tested = 0;
  std::vector<SearchHit> hits;
  double elapsed_ms = 0.0;
  bool deterministic = true;
};

/// Candidate count, saturating at UINT64_MAX.
std::uint64_t family_cardinality(const Field& field, const FamilySpec& family);
Poly family_candidate(const Field& field, const FamilySpec& family, std::uint64_t index);

/// Throws BudgetExceeded when the family is larger than options.budget or the
/// worst-case classification cost exceeds options.op_budget.
SearchReport run_search(const Field& field, const FamilySpec& family, SearchMode mode,
                        const SearchOptions& options = {});

/// Re-tests a seeded sample of the candidates with the Poly-level predicates
/// and counts disagreements with the report.
struct SpotCheck {
  std::uint64_t sampled = 0;
  std::uint64_t mismatches = 0;
};
SpotCheck spot_check(const SearchReport& report, double fraction, std::uint64_t seed);

struct TheoremCheck {
  bool holds = false;
  SearchReport report;
};

/// No Alltop hits in the family; requires p == 3.
TheoremCheck verify_char3_theorem(const Field& field, const FamilySpec& family, const SearchOptions& options = {});

struct DegreeMismatch {
  std::uint64_t n;
  Elem a;
  Degree found;
  std::uint64_t predicted;
};

struct DegreeTheoremReport {
  bool holds = false;
  std::uint64_t checked = 0;
  std::vector<DegreeMismatch> mismatches;
};

/// deg Delta(x^n, a) == predicted_delta_degree(n, p) for all n in [1, q-1], a != 0.
DegreeTheoremReport verify_monomial_degree_theorem(const Field& field);

struct CubicScopeViolation {
  std::uint64_t index;
  Poly poly;
  bool in_do_class;
  bool cubic_equivalent;
};

struct CubicScopeReport {
  bool holds = false;
  SearchReport search;
  std::vector<CubicScopeViolation> violations;
};

/// Every Alltop hit has DO-decomposable differences and is a cubic once its
/// additive and constant parts are removed. Requires p >= 5. Violations are
/// reported, never dropped.
CubicScopeReport verify_cubic_scope(const Field& field, const FamilySpec& family, const SearchOptions& options = {});

}  // namespace planarlab
