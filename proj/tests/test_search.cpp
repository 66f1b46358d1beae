#include <doctest.h>

#include <set>

#include "planarlab/search.hpp"

using namespace planarlab;

namespace {

std::set<std::string> hit_text(const SearchReport& r) {
  std::set<std::string> out;
  for (const auto& h : r.hits) out.insert(h.poly.to_string());
  return out;
}

const FamilySpec kMonomials{FamilyKind::Monomials, 0};

FamilySpec all_reduced(unsigned d) { return {FamilyKind::AllReduced, d}; }

}  // namespace

TEST_CASE("family cardinalities and candidates") {
  const Field f5 = make_field(5, 1);
  CHECK(family_cardinality(f5, kMonomials) == 3);
  CHECK(family_cardinality(f5, all_reduced(4)) == 3125);
  CHECK(family_cardinality(f5, {FamilyKind::ShiftedCubics, 0}) == 5);
  CHECK(family_cardinality(make_field(3, 3), {FamilyKind::DoMonomials, 0}) == 3);
  CHECK(family_cardinality(make_field(97, 2), all_reduced(9408)) == UINT64_MAX);

  CHECK(family_candidate(f5, kMonomials, 0).to_string() == "x^2");
  CHECK(family_candidate(f5, all_reduced(2), 0).is_zero());
  CHECK(family_candidate(f5, all_reduced(2), 1 + 2 * 5 + 3 * 25).to_string() == "3*x^2 + 2*x + 1");
  CHECK(family_candidate(make_field(3, 3), {FamilyKind::DoMonomials, 0}, 2).to_string() == "x^10");
  CHECK_THROWS_AS(family_candidate(f5, kMonomials, 3), Error);
}

TEST_CASE("monomial search examples") {
  const Field f5 = make_field(5, 1);
  const SearchReport planar = run_search(f5, kMonomials, SearchMode::Planar);
  CHECK(planar.tested == 3);
  CHECK(hit_text(planar) == std::set<std::string>{"x^2"});
  CHECK(hit_text(run_search(f5, kMonomials, SearchMode::Alltop)) == std::set<std::string>{"x^3"});
  CHECK(run_search(make_field(3, 2), kMonomials, SearchMode::Alltop).hits.empty());
  // Frobenius images of planar and Alltop monomials also appear.
  const Field f25 = make_field(5, 2);
  CHECK(hit_text(run_search(f25, kMonomials, SearchMode::Planar)) == std::set<std::string>{"x^10", "x^2"});
  CHECK(hit_text(run_search(f25, kMonomials, SearchMode::Alltop)) == std::set<std::string>{"x^15", "x^3"});
}

TEST_CASE("hits are sorted by candidate index") {
  const SearchReport r = run_search(make_field(7, 1), all_reduced(3), SearchMode::Planar);
  for (std::size_t i = 1; i < r.hits.size(); ++i) CHECK(r.hits[i - 1].index < r.hits[i].index);
  for (const auto& h : r.hits) CHECK(h.poly == family_candidate(r.field, r.family, h.index));
}

TEST_CASE("planar quadratics are exactly the nonzero leading coefficients") {
  const Field f5 = make_field(5, 1);
  const SearchReport r = run_search(f5, all_reduced(2), SearchMode::Planar);
  CHECK(r.tested == 125);
  CHECK(r.hits.size() == 100);
}

TEST_CASE("reports do not depend on the worker count") {
  const Field f7 = make_field(7, 1);
  const SearchReport base = run_search(f7, all_reduced(3), SearchMode::Alltop, {.workers = 1});
  for (unsigned w : {2u, 3u, 4u, 8u}) {
    const SearchReport r = run_search(f7, all_reduced(3), SearchMode::Alltop, {.workers = w});
    CHECK(r.tested == base.tested);
    REQUIRE(r.hits.size() == base.hits.size());
    for (std::size_t i = 0; i < r.hits.size(); ++i) CHECK(r.hits[i].index == base.hits[i].index);
  }
}

TEST_CASE("spot checks agree with the table classifier") {
  const Field f5 = make_field(5, 1);
  for (SearchMode mode : {SearchMode::Planar, SearchMode::Alltop}) {
    const SearchReport r = run_search(f5, all_reduced(4), mode, {.workers = 2});
    const SpotCheck s = spot_check(r, 0.1, 99);
    CHECK(s.sampled >= 300);
    CHECK(s.mismatches == 0);
  }
}

TEST_CASE("budgets are enforced") {
  const Field f5 = make_field(5, 1);
  CHECK_THROWS_WITH_AS(run_search(f5, all_reduced(4), SearchMode::Planar, {.budget = 100}),
                       doctest::Contains("BudgetExceeded"), Error);
  CHECK_THROWS_WITH_AS(run_search(make_field(97, 2), all_reduced(3), SearchMode::Planar),
                       doctest::Contains("BudgetExceeded"), Error);
  CHECK_THROWS_WITH_AS(run_search(f5, all_reduced(4), SearchMode::Alltop, {.op_budget = 1000}),
                       doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("characteristic 3 has no Alltop functions") {
  const TheoremCheck a = verify_char3_theorem(make_field(3, 1), all_reduced(2));
  CHECK(a.holds);
  CHECK(a.report.tested == 27);
  const TheoremCheck b = verify_char3_theorem(make_field(3, 2), kMonomials);
  CHECK(b.holds);
  CHECK(b.report.tested == 7);
  const TheoremCheck c = verify_char3_theorem(make_field(3, 3), kMonomials);
  CHECK(c.holds);
  CHECK(c.report.tested == 25);
  CHECK(verify_char3_theorem(make_field(3, 2), all_reduced(3)).holds);
  CHECK_THROWS_AS(verify_char3_theorem(make_field(5, 1), kMonomials), Error);
}

TEST_CASE("monomial degree prediction holds") {
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{5, 2}, {7, 1}, {3, 4}}) {
    const DegreeTheoremReport d = verify_monomial_degree_theorem(make_field(p, r));
    CHECK(d.holds);
    CHECK(d.mismatches.empty());
    const std::uint64_t q = make_field(p, r).q();
    CHECK(d.checked == (q - 1) * (q - 1));
  }
}

TEST_CASE("Alltop hits over prime fields are cubic up to equivalence") {
  const CubicScopeReport r5 = verify_cubic_scope(make_field(5, 1), all_reduced(4));
  CHECK(r5.holds);
  CHECK(r5.search.hits.size() == 500);
  for (const auto& h : r5.search.hits) {
    CHECK(h.poly.coeff(4) == 0);
    CHECK(h.poly.coeff(3) != 0);
  }

  const Field f7 = make_field(7, 1);
  const CubicScopeReport r7 = verify_cubic_scope(f7, {FamilyKind::ShiftedCubics, 0});
  CHECK(r7.holds);
  CHECK(r7.search.hits.size() == 7);
  CHECK(verify_cubic_scope(f7, all_reduced(3)).holds);
  CHECK_THROWS_WITH_AS(verify_cubic_scope(make_field(3, 2), kMonomials),
                       doctest::Contains("CharacteristicTooSmall"), Error);
}

TEST_CASE("Frobenius images of the cubic are reported, not hidden") {
  const CubicScopeReport r = verify_cubic_scope(make_field(5, 2), kMonomials);
  CHECK(hit_text(r.search) == std::set<std::string>{"x^15", "x^3"});
  CHECK_FALSE(r.holds);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].poly.to_string() == "x^15");
  CHECK_FALSE(r.violations[0].in_do_class);
  CHECK_FALSE(r.violations[0].cubic_equivalent);
}

TEST_CASE("name conversions") {
  CHECK(family_kind_from_string("all-reduced") == FamilyKind::AllReduced);
  CHECK(to_string(FamilyKind::ShiftedCubics) == "shifted-cubics");
  CHECK(search_mode_from_string("alltop") == SearchMode::Alltop);
  CHECK_THROWS_AS(search_mode_from_string("bent"), Error);
}
