#include "doctest.h"

#include <random>

#include "random_instances.hpp"
#include "widthlab/completeness.hpp"

using namespace widthlab;
using widthlab::testing::random_body;
using widthlab::testing::random_coord;
using widthlab::testing::random_symmetric_norm;
using V2 = Vec<Rat, 2>;

TEST_SUITE_BEGIN("properties");

TEST_CASE("hulls, completions, and plane constant width over 100 random seeds") {
  for (unsigned seed = 0; seed < 100; ++seed) {
    CAPTURE(seed);
    std::mt19937 rng(seed);
    const Norm<Rat, 2> n = (seed % 2 == 0) ? Norm<Rat, 2>::l1() : random_symmetric_norm(rng);
    const Polytope<Rat, 2> k = random_body(rng, seed % 5 == 0);

    const auto eta = wide_spherical_hull(n, k);
    const auto tau = tight_spherical_hull(n, k);
    const Rat diam = diameter(n, k).value;

    // Sandwich K ⊆ tau ⊆ eta, and tau preserves the diameter.
    REQUIRE(contains_polytope(tau.hull, k));
    REQUIRE(contains_polytope(eta.hull, tau.hull));
    REQUIRE(diameter(n, tau.hull).value == diam);

    // Uniqueness criterion cross-check.
    const bool unique = diameter(n, eta.hull).value == diam;
    REQUIRE(unique == equal(eta.hull, tau.hull));

    for (const TieRule rule : {TieRule::lexicographic, TieRule::reverse_lexicographic}) {
      const auto comp = complete_greedily(n, k, rule);
      REQUIRE(comp.complete);
      REQUIRE(is_complete(n, comp.body));
      REQUIRE(diameter(n, comp.body).value == diam);
      REQUIRE(contains_polytope(comp.body, k));
      REQUIRE(contains_polytope(comp.body, tau.hull));
      REQUIRE(contains_polytope(eta.hull, comp.body));
      // Every plane completion is of constant width (exact check).
      REQUIRE(is_constant_width(n, comp.body).holds);
    }
  }
}

TEST_CASE("round-trip and minkowski properties on random polygons") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_body(rng, false);
    const auto b = random_body(rng, trial % 3 == 0);
    REQUIRE(equal(convex_hull<Rat, 2>(a.vertices), a));
    REQUIRE(equal(intersect_halfspaces<Rat, 2>(a.facets), a));
    REQUIRE(equal(minkowski_sum(a, b), minkowski_sum(b, a)));
    const auto origin = convex_hull<Rat, 2>({V2(Rat(0), Rat(0))});
    REQUIRE(equal(minkowski_sum(a, origin), a));
  }
}

TEST_SUITE_END();
