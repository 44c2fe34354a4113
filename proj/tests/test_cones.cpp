#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "novikov/cones.hpp"
#include "novikov/errors.hpp"
#include "test_util.hpp"

using namespace novikov;
using testutil::Rng;

namespace {

HalfSpace hs(std::vector<long> form, bool strict) {
  std::vector<mpz_class> f(form.begin(), form.end());
  return HalfSpace(std::move(f), strict);
}

IntegralCone cone(int rank, std::vector<HalfSpace> v) {
  return IntegralCone(rank, std::move(v));
}

Character pt(std::vector<long> v) { return testutil::lattice_character(v); }

}  // namespace

TEST_CASE("half-space normalization preserves sign and divides the gcd") {
  HalfSpace a = hs({2, 4, -6}, true);
  CHECK(a.form() == std::vector<mpz_class>{1, 2, -3});
  HalfSpace b = hs({-2, 4}, false);
  CHECK(b.form() == std::vector<mpz_class>{-1, 2});
  HalfSpace z = hs({0, 0}, true);
  CHECK(z.is_zero_form());

  CHECK_FALSE(a.satisfied_by(pt({1, 1, 1})));  // 1+2-3 = 0 and the form is strict
  CHECK(a.satisfied_by(pt({2, 1, 1})));        // 2+2-3 = 1 > 0
  CHECK(hs({1, 2, -3}, false).satisfied_by(pt({1, 1, 1})));  // 0 >= 0

  HalfSpace n = a.negated();
  CHECK(n.form() == std::vector<mpz_class>{-1, -2, 3});
  CHECK_FALSE(n.strict());
  CHECK(n.negated() == a);
}

TEST_CASE("cones deduplicate and order their constraints") {
  IntegralCone c = cone(1, {hs({1}, false), hs({1}, true), hs({1}, true),
                            hs({0}, false)});
  // The non-strict copy is implied by the strict one and the trivial row
  // disappears.
  REQUIRE(c.constraints().size() == 1);
  CHECK(c.constraints()[0] == hs({1}, true));

  CHECK(IntegralCone::whole_space(2).contains(pt({-5, 7})));
  CHECK_THROWS_AS(cone(2, {hs({1}, true)}), structural_error);
}

TEST_CASE("emptiness decisions on frozen cones") {
  // {x > 0, -x > 0} is empty; relaxing both to >= leaves the origin.
  CHECK(cone_is_empty(cone(1, {hs({1}, true), hs({-1}, true)})));
  CHECK_FALSE(cone_is_empty(cone(1, {hs({1}, false), hs({-1}, false)})));
  // Mixed: {x >= 0, -x > 0} is empty.
  CHECK(cone_is_empty(cone(1, {hs({1}, false), hs({-1}, true)})));

  // {x+y > 0, x-y > 0, -x >= 0}: first two force x > 0.
  CHECK(cone_is_empty(cone(2, {hs({1, 1}, true), hs({1, -1}, true), hs({-1, 0}, false)})));
  // {x-y > 0, y > 0} contains (2,1).
  IntegralCone wedge = cone(2, {hs({1, -1}, true), hs({0, 1}, true)});
  CHECK_FALSE(cone_is_empty(wedge));
  CHECK(wedge.contains(pt({2, 1})));
  CHECK_FALSE(wedge.contains(pt({1, 1})));

  // A contradictory zero row empties the cone outright.
  CHECK(cone_is_empty(cone(2, {hs({0, 0}, true)})));
  CHECK_FALSE(cone_is_empty(IntegralCone::whole_space(3)));
  CHECK_FALSE(cone_is_empty(IntegralCone::whole_space(0)));
  CHECK(cone_is_empty(IntegralCone(0, {HalfSpace({}, true)})));

  // Chain x1 > x2 > x3 > x1 is empty, any acyclic chain is not.
  CHECK(cone_is_empty(cone(3, {hs({1, -1, 0}, true), hs({0, 1, -1}, true),
                               hs({-1, 0, 1}, true)})));
  CHECK_FALSE(cone_is_empty(cone(3, {hs({1, -1, 0}, true), hs({0, 1, -1}, true)})));
}

TEST_CASE("emptiness is independent of the elimination order") {
  Rng rng(314159);
  for (int trial = 0; trial < 300; ++trial) {
    int rank = static_cast<int>(testutil::rand_long(rng, 1, 4));
    IntegralCone c = testutil::random_cone(rng, rank, 5);
    bool empty = cone_is_empty(c);
    std::vector<int> order(rank);
    std::iota(order.begin(), order.end(), 0);
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(detail::cone_is_empty_with_order(c, order) == empty);
    }
    // Soundness: an empty cone admits no sampled member.
    if (empty) {
      for (int s = 0; s < 30; ++s)
        CHECK_FALSE(c.contains(testutil::random_character(rng, rank)));
    }
  }
}

TEST_CASE("boolean operations agree with pointwise membership") {
  Rng rng(271828);
  for (int trial = 0; trial < 120; ++trial) {
    int rank = static_cast<int>(testutil::rand_long(rng, 1, 3));
    IntegralSubset u = testutil::random_subset(rng, rank);
    IntegralSubset v = testutil::random_subset(rng, rank);
    IntegralSubset nu = subset_complement(u);
    IntegralSubset uv = subset_intersect(u, v);
    IntegralSubset uvu = subset_union(u, v);
    IntegralSubset nnu = subset_complement(nu);
    for (int s = 0; s < 40; ++s) {
      Character xi = testutil::random_character(rng, rank);
      bool in_u = contains_point(u, xi);
      bool in_v = contains_point(v, xi);
      CHECK(contains_point(nu, xi) == !in_u);
      CHECK(contains_point(uv, xi) == (in_u && in_v));
      CHECK(contains_point(uvu, xi) == (in_u || in_v));
      CHECK(contains_point(nnu, xi) == in_u);
    }
  }
}

TEST_CASE("whole space and empty set behave as boolean units") {
  for (int rank = 0; rank <= 3; ++rank) {
    IntegralSubset whole = IntegralSubset::whole_space(rank);
    IntegralSubset empty = IntegralSubset::empty_set(rank);
    CHECK_FALSE(subset_is_empty(whole));
    CHECK(subset_is_empty(empty));
    CHECK(subset_is_empty(subset_complement(whole)));
    CHECK_FALSE(subset_is_empty(subset_complement(empty)));
    CHECK(subset_equivalent(subset_complement(empty), whole));
    Character origin;
    origin.coords.assign(rank, 0);
    CHECK(contains_point(whole, origin));
    CHECK_FALSE(contains_point(empty, origin));
  }
  CHECK_THROWS_AS(subset_intersect(IntegralSubset::whole_space(1),
                                   IntegralSubset::whole_space(2)),
                  structural_error);
}

TEST_CASE("lattice points witness nonemptiness exactly") {
  // {x > 0}: some positive integer.
  auto p1 = lattice_point(IntegralSubset::of(cone(1, {hs({1}, true)})));
  REQUIRE(p1.has_value());
  CHECK((*p1)[0] > 0);

  // {2x - 3y >= 0, y > 0}: e.g. (3,2) type points.
  IntegralSubset s2 = IntegralSubset::of(cone(2, {hs({2, -3}, false), hs({0, 1}, true)}));
  auto p2 = lattice_point(s2);
  REQUIRE(p2.has_value());
  CHECK(contains_point(s2, character_from_integers(*p2)));

  // Empty set: nothing to find.
  CHECK_FALSE(lattice_point(IntegralSubset::empty_set(2)).has_value());
  CHECK_FALSE(lattice_point(IntegralSubset::of(cone(1, {hs({1}, true), hs({-1}, true)}))).has_value());

  // The whole space yields the origin-like trivial point.
  auto p0 = lattice_point(IntegralSubset::whole_space(2));
  REQUIRE(p0.has_value());

  // Rank 0: the unique point is the empty tuple.
  auto pr0 = lattice_point(IntegralSubset::whole_space(0));
  REQUIRE(pr0.has_value());
  CHECK(pr0->empty());
}

TEST_CASE("lattice extraction on random subsets") {
  Rng rng(577215);
  int found = 0;
  for (int trial = 0; trial < 250; ++trial) {
    int rank = static_cast<int>(testutil::rand_long(rng, 1, 4));
    IntegralSubset s = testutil::random_subset(rng, rank, 3);
    auto p = lattice_point(s);
    CHECK(p.has_value() == !subset_is_empty(s));
    if (p.has_value()) {
      ++found;
      REQUIRE(p->size() == static_cast<std::size_t>(rank));
      CHECK(contains_point(s, character_from_integers(*p)));
    }
  }
  CHECK(found > 50);  // the generator produces plenty of nonempty subsets
}

TEST_CASE("semantic equivalence sees through representation changes") {
  IntegralSubset u = IntegralSubset::of(cone(1, {hs({1}, true)}));
  IntegralSubset v = subset_complement(subset_complement(u));
  CHECK(subset_equivalent(u, v));
  CHECK_FALSE(subset_equivalent(u, IntegralSubset::of(cone(1, {hs({1}, false)}))));

  // {x>0} union {x>0, x-y>0} collapses to {x>0} up to equivalence.
  IntegralSubset w = subset_union(
      IntegralSubset::of(cone(2, {hs({1, 0}, true)})),
      IntegralSubset::of(cone(2, {hs({1, 0}, true), hs({1, -1}, true)})));
  CHECK(subset_equivalent(w, IntegralSubset::of(cone(2, {hs({1, 0}, true)}))));

  // De Morgan on random data, checked semantically.
  Rng rng(16180);
  for (int trial = 0; trial < 40; ++trial) {
    int rank = 2;
    IntegralSubset a = testutil::random_subset(rng, rank, 2);
    IntegralSubset b = testutil::random_subset(rng, rank, 2);
    CHECK(subset_equivalent(subset_complement(subset_union(a, b)),
                            subset_intersect(subset_complement(a), subset_complement(b))));
  }
}

TEST_CASE("canonical form is stable under input reordering") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    int rank = 3;
    std::vector<HalfSpace> hs1;
    for (int i = 0; i < 4; ++i) hs1.push_back(testutil::random_halfspace(rng, rank));
    std::vector<HalfSpace> hs2 = hs1;
    std::shuffle(hs2.begin(), hs2.end(), rng);
    CHECK(cone(rank, hs1) == cone(rank, hs2));

    std::vector<IntegralCone> cs1;
    for (int i = 0; i < 3; ++i) cs1.push_back(testutil::random_cone(rng, rank));
    std::vector<IntegralCone> cs2 = cs1;
    std::shuffle(cs2.begin(), cs2.end(), rng);
    IntegralSubset s1(rank, cs1), s2(rank, cs2);
    REQUIRE(s1.cones().size() == s2.cones().size());
    for (std::size_t i = 0; i < s1.cones().size(); ++i)
      CHECK(s1.cones()[i] == s2.cones()[i]);
  }
}

TEST_CASE("rendering of half-spaces and cones") {
  CHECK(to_string(hs({1, 0, -2}, true)) == "(1,0,-2) > 0");
  CHECK(to_string(hs({-1, 2}, false)) == "(-1,2) >= 0");
  CHECK(to_string(IntegralCone::whole_space(2)) == "all");
  CHECK(to_string(cone(2, {hs({0, 1}, true), hs({1, -1}, true)})) ==
        "(0,1) > 0 & (1,-1) > 0");
}
