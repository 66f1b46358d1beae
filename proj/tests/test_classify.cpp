#include <doctest.h>

#include <numeric>
#include <random>

#include "planarlab/classify.hpp"

using namespace planarlab;

namespace {

// Definition-level oracle: evaluates f at every point and checks each
// difference map for injectivity without the early-exit machinery.
bool planar_by_definition(const Poly& f) {
  const Field& F = f.field();
  for (Elem a = 1; a < F.q(); ++a) {
    std::vector<bool> hit(F.q(), false);
    for (Elem x = 0; x < F.q(); ++x) {
      const Elem v = F.sub(eval(f, F.add(x, a)), eval(f, x));
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

bool alltop_by_definition(const Poly& f) {
  const Field& F = f.field();
  for (Elem a = 1; a < F.q(); ++a)
    if (!planar_by_definition(delta(f, F.element(a)))) return false;
  return true;
}

Poly random_additive(const Field& f, std::mt19937_64& rng) {
  Poly m(f);
  std::uint64_t e = 1;
  for (unsigned i = 0; i < f.r(); ++i, e *= f.p()) m.add_term(e, rng() % f.q());
  return m;
}

}  // namespace

TEST_CASE("is_permutation examples") {
  const Field f5 = make_field(5, 1), f7 = make_field(7, 1);
  CHECK(is_permutation(parse_poly("x", f7)));
  CHECK_FALSE(is_permutation(parse_poly("x^2", f5)));
  CHECK(is_permutation(parse_poly("x^3", f5)));
  CHECK_FALSE(is_permutation(parse_poly("x^3", f7)));
}

TEST_CASE("monomial permutations follow gcd(n, q-1)") {
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    const Field f = make_field(p, r);
    for (std::uint64_t n = 1; n < f.q(); ++n)
      CHECK(is_permutation(Poly::monomial(f, n)) == (std::gcd<std::uint64_t>(n, f.q() - 1) == 1));
  }
}

TEST_CASE("permutation witness is a genuine collision") {
  const Field f5 = make_field(5, 1);
  const auto t = value_table(parse_poly("x^2", f5));
  TableClassifier c(f5);
  const auto w = c.permutation_violation(t.values);
  REQUIRE(w);
  CHECK(w->x < w->x2);
  CHECK(t[w->x] == t[w->x2]);
}

TEST_CASE("is_additive_function examples") {
  const Field f25 = make_field(5, 2);
  CHECK(is_additive_function(parse_poly("x^5", f25)));
  CHECK_FALSE(is_additive_function(parse_poly("x^2", make_field(5, 1))));
  const Field f9 = make_field(3, 2);
  CHECK(is_additive_function(parse_poly("2*x + x^3", f9)));
  CHECK_FALSE(is_additive_function(parse_poly("x + 1", f9)));
}

TEST_CASE("semantic and syntactic additivity coincide on reduced polynomials") {
  std::mt19937_64 rng(2);
  const Field f9 = make_field(3, 2);
  for (int i = 0; i < 300; ++i) {
    Poly g(f9);
    for (int j = 0; j < 3; ++j) g.add_term(rng() % 9, rng() % 9);
    CHECK(is_additive_function(g) == is_additive_syntactic(g));
  }
}

TEST_CASE("is_planar examples") {
  const Field f5 = make_field(5, 1);
  CHECK(is_planar(parse_poly("x^2", f5)));
  CHECK_FALSE(is_planar(parse_poly("x^4", f5)));
  TableClassifier c(f5);
  const auto w = c.planar_violation(value_table(parse_poly("x^4", f5)).values);
  REQUIRE(w);
  CHECK(w->a == 1);
  CHECK(w->x == 1);
  CHECK(w->x2 == 2);
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {5, 2}, {7, 1}})
    CHECK_FALSE(is_planar(Poly::monomial(make_field(p, r), p)));
}

TEST_CASE("table planarity agrees with the definition") {
  std::mt19937_64 rng(8);
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const Field f = make_field(p, r);
    for (int i = 0; i < 60; ++i) {
      Poly g(f);
      for (int j = 0; j < 3; ++j) g.add_term(rng() % f.q(), rng() % f.q());
      REQUIRE(is_planar(g) == planar_by_definition(g));
    }
  }
}

TEST_CASE("is_alltop examples") {
  CHECK(is_alltop(parse_poly("x^3", make_field(5, 1))));
  const Field f7 = make_field(7, 1);
  for (Elem b = 0; b < 7; ++b)
    CHECK(is_alltop(shift_scale(Poly::monomial(f7, 3), f7.one(), f7.element(b))));
  CHECK_FALSE(is_alltop(parse_poly("x^2", f7)));
}

TEST_CASE("no Alltop polynomial over GF(3) at all, and none of a sample over GF(9) and GF(27)") {
  const Field f3 = make_field(3, 1);
  for (Elem c0 = 0; c0 < 3; ++c0)
    for (Elem c1 = 0; c1 < 3; ++c1)
      for (Elem c2 = 0; c2 < 3; ++c2) CHECK_FALSE(is_alltop(Poly(f3, {{0, c0}, {1, c1}, {2, c2}})));
  std::mt19937_64 rng(3);
  for (unsigned r : {2u, 3u}) {
    const Field f = make_field(3, r);
    for (int i = 0; i < 100; ++i) {
      Poly g(f);
      for (int j = 0; j < 4; ++j) g.add_term(rng() % f.q(), rng() % f.q());
      CHECK_FALSE(is_alltop(g));
    }
  }
}

TEST_CASE("table Alltop test agrees with the definition") {
  std::mt19937_64 rng(12);
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{5, 1}, {7, 1}}) {
    const Field f = make_field(p, r);
    for (int i = 0; i < 80; ++i) {
      Poly g(f);
      for (unsigned e = 0; e < 4; ++e) g.add_term(e, rng() % f.q());
      REQUIRE(is_alltop(g) == alltop_by_definition(g));
    }
  }
}

TEST_CASE("is_do_monomial_planar examples") {
  CHECK(is_do_monomial_planar(5, 1, 0));
  CHECK(is_do_monomial_planar(3, 3, 1));
  CHECK_FALSE(is_do_monomial_planar(3, 2, 1));
  CHECK(is_planar(Poly::monomial(make_field(3, 3), 4)));
  CHECK_FALSE(is_planar(Poly::monomial(make_field(3, 2), 4)));
  CHECK_THROWS_AS(is_do_monomial_planar(4, 1, 0), Error);
}

TEST_CASE("do_decompose examples") {
  const Field f5 = make_field(5, 1);
  CHECK_FALSE(do_decompose(parse_poly("2*x^3 + x + 4", f5)));

  const auto d = do_decompose(parse_poly("3*x^2 + 2*x + 1", f5));
  REQUIRE(d);
  CHECK(d->k == 0);
  CHECK(d->alpha.encoding() == 3);
  CHECK(d->additive_part.to_string() == "2*x");
  CHECK(d->constant.encoding() == 1);

  const Field f7 = make_field(7, 1);
  for (Elem beta = 0; beta < 7; ++beta) {
    const Poly f = shift_scale(Poly::monomial(f7, 3), f7.one(), f7.element(beta));
    for (Elem a = 1; a < 7; ++a) {
      const auto dd = do_decompose(reduce(delta(f, f7.element(a))));
      REQUIRE(dd);
      CHECK(dd->k == 0);
      CHECK(dd->alpha.encoding() == f7.mul(3, a));
    }
  }

  CHECK_FALSE(do_decompose(parse_poly("x + 1", f5)));          // nothing beyond additive
  CHECK_FALSE(do_decompose(parse_poly("x^2 + x^3", f5)));      // two non-additive terms
  const auto k1 = do_decompose(parse_poly("4*x^6 + x^5 + 2", make_field(5, 2)));
  REQUIRE(k1);
  CHECK(k1->k == 1);
}

TEST_CASE("do_decompose round-trips") {
  std::mt19937_64 rng(6);
  const Field f25 = make_field(5, 2);
  for (int i = 0; i < 200; ++i) {
    Poly g(f25);
    g.add_term(rng() % 2 ? 2 : 6, 1 + rng() % 24);
    g.add_term(1, rng() % 25);
    g.add_term(5, rng() % 25);
    g.add_term(0, rng() % 25);
    const auto d = do_decompose(g);
    REQUIRE(d);
    CHECK(d->reconstruct() == reduce(g));
  }
}

TEST_CASE("apply_equiv_transform examples and errors") {
  const Field f5 = make_field(5, 1);
  const Poly sq = parse_poly("x^2", f5);
  CHECK(apply_equiv_transform(sq, f5.one(), f5.one(), f5.zero(), Poly(f5), f5.zero()) == sq);
  for (Elem beta = 0; beta < 5; ++beta) {
    const Poly g = apply_equiv_transform(sq, f5.one(), f5.one(), f5.element(beta), Poly(f5), f5.zero());
    CHECK(g == Poly(f5, {{2, 1}, {1, f5.mul(2, beta)}, {0, f5.mul(beta, beta)}}));
  }
  CHECK_THROWS_WITH_AS(apply_equiv_transform(sq, f5.zero(), f5.one(), f5.zero(), Poly(f5), f5.zero()),
                       doctest::Contains("ZeroScale"), Error);
  CHECK_THROWS_WITH_AS(apply_equiv_transform(sq, f5.one(), f5.zero(), f5.zero(), Poly(f5), f5.zero()),
                       doctest::Contains("ZeroScale"), Error);
  CHECK_THROWS_WITH_AS(apply_equiv_transform(sq, f5.one(), f5.one(), f5.zero(), sq, f5.zero()),
                       doctest::Contains("NonAdditiveM"), Error);
}

TEST_CASE("equivalence transforms preserve planarity") {
  std::mt19937_64 rng(2024);
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {5, 2}, {3, 3}}) {
    const Field f = make_field(p, r);
    for (const Poly& pi : {Poly::monomial(f, 2), Poly::monomial(f, p + 1)}) {
      const bool planar = is_planar(pi);
      for (int i = 0; i < 30; ++i) {
        const Poly g = apply_equiv_transform(pi, f.element(1 + rng() % (f.q() - 1)),
                                             f.element(1 + rng() % (f.q() - 1)), f.element(rng() % f.q()),
                                             random_additive(f, rng), f.element(rng() % f.q()));
        REQUIRE(is_planar(g) == planar);
      }
    }
  }
}

TEST_CASE("Alltop is invariant under shifts and additive perturbations") {
  std::mt19937_64 rng(77);
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{5, 1}, {7, 1}, {5, 2}}) {
    const Field f = make_field(p, r);
    for (int i = 0; i < 20; ++i) {
      Poly g(f);
      for (unsigned e = 0; e < 4; ++e) g.add_term(e, rng() % f.q());
      Poly h = shift_scale(g, f.one(), f.element(rng() % f.q())) + random_additive(f, rng);
      h.add_term(0, rng() % f.q());
      REQUIRE(is_alltop(g) == is_alltop(h));
    }
  }
}

TEST_CASE("DO monomial planarity matches the gcd criterion") {
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}}) {
    const Field f = make_field(p, r);
    std::uint64_t pk = 1;
    for (unsigned k = 0; k < r; ++k, pk *= p) CHECK(is_planar(Poly::monomial(f, pk + 1)) == is_do_monomial_planar(p, r, k));
  }
}

TEST_CASE("alltop_in_do_class") {
  CHECK(alltop_in_do_class(parse_poly("x^3", make_field(5, 1))));
  const Field f7 = make_field(7, 1);
  for (Elem b = 0; b < 7; ++b) {
    Poly f = shift_scale(Poly::monomial(f7, 3), f7.one(), f7.element(b));
    f.add_term(1, f7.mul(b, 3));
    f.add_term(0, 5);
    CHECK(alltop_in_do_class(f));
    CHECK(is_cubic_equivalent(f));
  }
  CHECK_THROWS_WITH_AS(alltop_in_do_class(parse_poly("x^2", f7)), doctest::Contains("NotAlltop"), Error);
  // Outer Frobenius of the cubic: Alltop, but outside the DO decomposition class.
  const Field f25 = make_field(5, 2);
  CHECK(is_alltop(Poly::monomial(f25, 15)));
  CHECK_FALSE(alltop_in_do_class(Poly::monomial(f25, 15)));
  CHECK_FALSE(is_cubic_equivalent(Poly::monomial(f25, 15)));
}

TEST_CASE("strip_additive_and_constant") {
  const Field f5 = make_field(5, 1);
  CHECK(strip_additive_and_constant(parse_poly("x^7 + 2*x^3 + x + 4", f5)).to_string() == "3*x^3");
  CHECK(strip_additive_and_constant(parse_poly("x^5 + 3", f5)).is_zero());
}
