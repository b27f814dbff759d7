#include "doctest.h"

#include "widthlab/completeness.hpp"

using namespace widthlab;
using V2 = Vec<Rat, 2>;
using V3 = Vec<Rat, 3>;
using W2 = Vec<double, 2>;
using W3 = Vec<double, 3>;

namespace {

V2 v2(long x, long y) { return V2(Rat(x), Rat(y)); }
V3 v3(long x, long y, long z) { return V3(Rat(x), Rat(y), Rat(z)); }

Polytope<Rat, 3> paper_tetrahedron() {
  return convex_hull<Rat, 3>({v3(-1, -1, -1), v3(1, 1, -1), v3(1, -1, 1), v3(-1, 1, 1)});
}

Norm<Rat, 3> bipyramid_norm() {
  return Norm<Rat, 3>::polytopal(convex_hull<Rat, 3>({v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0),
                                                      v3(0, -1, 0), v3(1, 1, 0), v3(-1, -1, 0),
                                                      v3(0, 0, 1), v3(0, 0, -1)}));
}

Norm<Rat, 3> perturbed_icosahedron_norm() {
  const Rat phi(809, 500);  // rational stand-in for the golden ratio
  std::vector<V3> pts;
  for (int s1 : {-1, 1}) {
    for (int s2 : {-1, 1}) {
      pts.push_back(V3(Rat(0), Rat(s1), Rat(s2) * phi));
      pts.push_back(V3(Rat(s1), Rat(s2) * phi, Rat(0)));
      pts.push_back(V3(Rat(s2) * phi, Rat(0), Rat(s1)));
    }
  }
  return Norm<Rat, 3>::polytopal(convex_hull<Rat, 3>(pts));
}

}  // namespace

TEST_SUITE_BEGIN("completeness");

TEST_CASE("completeness of the tetrahedron, segments, and balls") {
  const auto n = Norm<Rat, 3>::l1();
  CHECK(is_complete(n, paper_tetrahedron()));
  CHECK_FALSE(is_complete(n, convex_hull<Rat, 3>({v3(-1, 0, 0), v3(1, 0, 0)})));
  CHECK(is_complete(n, *make_ball(n, v3(0, 1, 0), Rat(2)).materialized));

  // Sampled evidence that a Euclidean segment is not complete: eta contains
  // points outside the segment.
  const auto l2 = Norm<double, 2>::l2();
  const auto seg = convex_hull<double, 2>({W2(-1.0, 0.0), W2(1.0, 0.0)});
  CHECK(eta_contains(l2, seg, W2(0.0, 1.0)));
  CHECK_FALSE(contains(seg, W2(0.0, 1.0)));
}

TEST_CASE("constant width decided by the difference body") {
  const auto n = Norm<Rat, 3>::l1();
  const auto cw = is_constant_width(n, paper_tetrahedron());
  CHECK_FALSE(cw.holds);
  REQUIRE(cw.witness);
  CHECK(*cw.witness_width == Rat(2));
  CHECK(dual_norm(n, cw.witness->a) == Rat(1));
  // The witness is an interior dual direction: every extreme dual
  // functional sees the full width 4 on this body.
  for (const auto& f : dual_unit_functionals(n)) {
    CHECK(width(n, paper_tetrahedron(), f) == Rat(4));
  }
  CHECK(width(n, paper_tetrahedron(), *cw.witness) == Rat(2));

  CHECK(is_constant_width(n, n.ball()).holds);
}

TEST_CASE("greedy completion") {
  const auto n = Norm<Rat, 2>::l1();
  const auto seg = convex_hull<Rat, 2>({v2(-1, 0), v2(1, 0)});
  const auto res = complete_greedily(n, seg);
  CHECK(res.complete);
  CHECK(equal(res.body, n.ball()));  // unique completion is the unit ball

  const auto ninf = Norm<Rat, 2>::linf();
  const auto diag = convex_hull<Rat, 2>({v2(0, 0), v2(1, 1)});
  const auto comp = complete_greedily(ninf, diag);
  CHECK(comp.complete);
  CHECK(is_complete(ninf, comp.body));
  CHECK(contains_polytope(comp.body, diag));
  CHECK(diameter(ninf, comp.body).value == diameter(ninf, diag).value);
  const auto tau = tight_spherical_hull(ninf, diag);
  const auto eta = wide_spherical_hull(ninf, diag);
  CHECK(contains_polytope(comp.body, tau.hull));
  CHECK(contains_polytope(eta.hull, comp.body));
  CHECK_FALSE(comp.hausdorff_progress.empty());

  // Already complete: unchanged.
  const auto t = paper_tetrahedron();
  const auto n3 = Norm<Rat, 3>::l1();
  const auto idres = complete_greedily(n3, t);
  CHECK(idres.iterations == 0);
  CHECK(equal(idres.body, t));
}

TEST_CASE("uniqueness of completion via the diameter criterion") {
  const auto l12 = Norm<Rat, 2>::l1();
  const auto l13 = Norm<Rat, 3>::l1();
  const auto linf2 = Norm<Rat, 2>::linf();
  const auto seg2 = convex_hull<Rat, 2>({v2(-1, 0), v2(1, 0)});
  const auto seg3 = convex_hull<Rat, 3>({v3(-1, 0, 0), v3(1, 0, 0)});
  CHECK(unique_completion(l12, seg2));
  CHECK(unique_completion(l13, seg3));
  CHECK_FALSE(unique_completion(linf2, seg2));
  // Cross-check: uniqueness iff eta == tau.
  for (bool expected : {true}) {
    (void)expected;
    CHECK(unique_completion(l12, seg2) ==
          equal(wide_spherical_hull(l12, seg2).hull, tight_spherical_hull(l12, seg2).hull));
    CHECK(unique_completion(linf2, seg2) ==
          equal(wide_spherical_hull(linf2, seg2).hull, tight_spherical_hull(linf2, seg2).hull));
  }
}

TEST_CASE("two-ball intersection identity") {
  const auto n = Norm<Rat, 2>::l1();
  for (const Rat gamma : {Rat(1), Rat(3, 2), Rat(2), Rat(3)}) {
    const auto res = ball_intersection_identity(n, v2(1, 0), v2(-1, 0), gamma);
    CHECK(res.holds);
  }
  // gamma at the midpoint bound produces the degenerate singleton ball.
  const auto tight = ball_intersection_identity(n, v2(1, 0), v2(-1, 0), Rat(1));
  CHECK(tight.intersection.affine_dim == 0);

  const auto ninf = Norm<Rat, 2>::linf();
  CHECK_FALSE(ball_intersection_identity(ninf, v2(1, 0), v2(-1, 0), Rat(2)).holds);
  CHECK_THROWS_AS(static_cast<void>(ball_intersection_identity(n, v2(1, 0), v2(-1, 0), Rat(1, 2))),
                  GeomError);
}

TEST_CASE("segment uniqueness property U1 across norms") {
  const auto u1_l12 = check_u1(Norm<Rat, 2>::l1());
  CHECK(u1_l12.verdict == Verdict::holds);
  CHECK(vec_eq<Rat, 2>(*u1_l12.u, v2(1, 0)));
  CHECK(u1_l12.sections_consistent);

  const auto u1_l13 = check_u1(Norm<Rat, 3>::l1());
  CHECK(u1_l13.verdict == Verdict::holds);
  CHECK(vec_eq<Rat, 3>(*u1_l13.u, v3(1, 0, 0)));
  CHECK(u1_l13.sections_consistent);

  CHECK(check_u1(Norm<Rat, 2>::linf()).verdict == Verdict::holds);
  CHECK(check_u1(Norm<Rat, 3>::linf()).verdict == Verdict::holds);

  const auto u1_bip = check_u1(bipyramid_norm());
  CHECK(u1_bip.verdict == Verdict::holds);
  CHECK(vec_eq<Rat, 3>(*u1_bip.u, v3(0, 0, 1)));
  CHECK(u1_bip.sections_consistent);

  const auto u1_ico = check_u1(perturbed_icosahedron_norm());
  CHECK(u1_ico.verdict == Verdict::fails);
  CHECK(u1_ico.scan.size() == 12);
  for (const auto& [u, de] : u1_ico.scan) {
    CHECK(de >= Rat(201, 100));  // failure margin is robust to the perturbation
  }
}

TEST_CASE("U1 certificate is consistent with the two-ball lemma") {
  const auto n = Norm<Rat, 2>::l1();
  const auto res = check_u1(n);
  REQUIRE(res.verdict == Verdict::holds);
  const V2 u = *res.u;
  for (const Rat gamma : {Rat(1), Rat(3, 2), Rat(2), Rat(3)}) {
    CHECK(ball_intersection_identity(n, u, V2(-u), gamma).holds);
  }
  // Papini-theorem contrapositive: a U1 norm cannot be uniformly nonsquare.
  const auto prof = convexity_profile<Rat, 2>(n, {Rat(2)});
  CHECK(prof.eps0 == Rat(2));
}

TEST_CASE("equilateral simplex properties, exact lane") {
  const auto n = Norm<Rat, 3>::l1();
  const auto t = convex_hull<Rat, 3>({v3(-1, 0, 0), v3(0, 1, 0), v3(1, 0, 0)});
  const auto res = check_um(n, t, 2);
  CHECK(res.side == Rat(2));
  CHECK(res.um == Verdict::holds);
  CHECK(res.umb == Verdict::holds);
  CHECK(res.eta_is_ball);
  CHECK(res.diam_eta == Rat(2));

  // Not equilateral: reports the offending pair.
  const auto bad = convex_hull<Rat, 3>({v3(0, 0, 0), v3(1, 0, 0), v3(0, 2, 0)});
  CHECK_THROWS_WITH_AS(static_cast<void>(check_um(n, bad, 2)),
                       "check_um: simplex is not equilateral (offending vertex pair 0,2)", GeomError);
  // Degenerate: a segment is not a 2-simplex.
  const auto seg = convex_hull<Rat, 3>({v3(0, 0, 0), v3(1, 1, 0)});
  CHECK_THROWS_AS(static_cast<void>(check_um(n, seg, 2)), GeomError);
}

TEST_CASE("equilateral simplex properties, sampled lane") {
  const auto l2 = Norm<double, 2>::l2();
  const auto t = convex_hull<double, 2>({W2(0, 0), W2(1, 0), W2(0.5, std::sqrt(3.0) / 2)});
  const auto res = check_um_sampled<2>(l2, t, 2);
  CHECK(res.um == Verdict::holds);        // unique completion (the Reuleaux triangle)
  CHECK(res.umb == Verdict::fails);       // but it is not a disk
  CHECK(res.diam_eta == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.min_width_eta == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(res.ball_spread > 0.1);

  const auto bicone = Norm<double, 3>::bicone();
  const auto tb = convex_hull<double, 3>({W3(0, 0, 1), W3(0, 0, -1), W3(1, 0, 0)});
  const auto resb = check_um_sampled<3>(bicone, tb, 2);
  CHECK(resb.um == Verdict::holds);
  CHECK(resb.umb == Verdict::holds);  // the unique completion is the unit ball itself
}

TEST_CASE("equidistant extension experiment, exact lane") {
  const auto n = Norm<Rat, 3>::l1();
  const auto t = convex_hull<Rat, 3>({v3(-1, 0, 0), v3(0, 1, 0), v3(1, 0, 0)});
  const auto ext = experiment_extend_simplex(n, t);
  CHECK(ext.side == Rat(2));
  auto has = [&](const V3& p) {
    for (const auto& c : ext.candidates) {
      if (vec_eq<Rat, 3>(c, p)) return true;
    }
    return false;
  };
  CHECK(has(v3(0, -1, 0)));
  CHECK(has(v3(0, 0, 1)));
  CHECK(has(v3(0, 0, -1)));
  CHECK(ext.extension_exists);  // e3 extends T to an equilateral 3-simplex

  const auto seg = convex_hull<Rat, 3>({v3(0, 0, 0), v3(1, 1, 0)});
  CHECK_THROWS_AS(static_cast<void>(experiment_extend_simplex(n, seg)), GeomError);
}

TEST_CASE("equidistant extension experiment, bicone") {
  const auto bicone = Norm<double, 3>::bicone();
  const auto t = convex_hull<double, 3>({W3(0, 0, 1), W3(0, 0, -1), W3(1, 0, 0)});
  const auto ext = experiment_extend_simplex_sampled(bicone, t, 200);
  CHECK(ext.pair_solutions.size() == 200);
  for (const auto& s : ext.pair_solutions) {
    CHECK(std::abs(s(0) * s(0) + s(1) * s(1) - 1.0) <= 1e-6);
    CHECK(std::abs(s(2)) <= 1e-6);
  }
  REQUIRE(ext.candidates.size() == 1);
  CHECK(ext.candidates[0](0) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(std::abs(ext.candidates[0](1)) <= 1e-6);
  CHECK(std::abs(ext.candidates[0](2)) <= 1e-6);
  CHECK_FALSE(ext.extension_exists);  // -v is coplanar with T
}

TEST_CASE("completeness report invariants") {
  const auto n = Norm<Rat, 3>::l1();
  const auto rep = completeness_report(n, paper_tetrahedron());
  CHECK(rep.complete);
  CHECK_FALSE(rep.constant_width);
  CHECK_FALSE(rep.ball);
  CHECK(rep.unique);
  CHECK(rep.diam == Rat(4));
  CHECK(rep.diam_eta == Rat(4));
  CHECK(*rep.cw_witness_width == Rat(2));

  const auto ball_rep = completeness_report(n, *make_ball(n, v3(0, 0, 0), Rat(2)).materialized);
  CHECK(ball_rep.ball);
  CHECK(ball_rep.complete);
  CHECK(ball_rep.constant_width);
  CHECK(*ball_rep.ball_radius == Rat(2));
}

TEST_CASE("A/D/E experiments on concrete instances") {
  // (A) fails in l1^3: the tetrahedron is its own completion and is not of
  // constant width.
  const auto n3 = Norm<Rat, 3>::l1();
  const auto rep3 = experiment_properties_ade(n3, {paper_tetrahedron()});
  CHECK(rep3.a == Verdict::fails_on_instance);

  // (A)/(D)/(E) hold on plane instances (diamond norm).
  const auto n2 = Norm<Rat, 2>::l1();
  const std::vector<Polytope<Rat, 2>> bodies = {
      convex_hull<Rat, 2>({v2(0, 0), v2(1, 0), v2(0, 1)}),
      convex_hull<Rat, 2>({v2(-1, 0), v2(1, 0)}),
      convex_hull<Rat, 2>({v2(0, 0), v2(2, 1), v2(1, 2)}),
  };
  const auto rep2 = experiment_properties_ade(n2, bodies);
  CHECK(rep2.a == Verdict::holds_on_instances);
  CHECK(rep2.d == Verdict::holds_on_instances);
  CHECK(rep2.e == Verdict::holds_on_instances);

  // (E) with a genuinely non-unique completion under the square norm.
  const auto ninf = Norm<Rat, 2>::linf();
  const auto repE = experiment_properties_ade(ninf, {convex_hull<Rat, 2>({v2(-1, 0), v2(1, 0)})});
  CHECK(repE.e_nontrivial_instances == 1);
  CHECK(repE.e == Verdict::holds_on_instances);
  CHECK(repE.instances[0].distinct_completions);
}

TEST_CASE("constant width implies ball on plane-norm completions (C evidence)") {
  const auto n3 = Norm<Rat, 3>::l1();
  const std::vector<Polytope<Rat, 3>> seeds = {
      paper_tetrahedron(),
      convex_hull<Rat, 3>({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}),
      convex_hull<Rat, 3>({v3(-1, 0, 0), v3(1, 0, 0)}),
  };
  for (const auto& k : seeds) {
    const auto comp = complete_greedily(n3, k);
    REQUIRE(comp.complete);
    if (is_constant_width(n3, comp.body).holds) {
      CHECK(as_ball(n3, comp.body).has_value());
    }
  }
}

TEST_SUITE_END();
