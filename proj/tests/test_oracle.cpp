#include "doctest.h"

#include "widthlab/completeness.hpp"
#include "widthlab/oracle.hpp"

using namespace widthlab;
using namespace widthlab::oracle;

namespace {

std::vector<DVec<3>> tetra_vertices() {
  return {DVec<3>(-1, -1, -1), DVec<3>(1, 1, -1), DVec<3>(1, -1, 1), DVec<3>(-1, 1, 1)};
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("oracle gauges") {
  OracleNorm<3> l1{NormKind::l1, {}};
  CHECK(oracle_gauge<3>(l1, DVec<3>(1, -2, 3)) == doctest::Approx(6.0));
  OracleNorm<3> bicone{NormKind::bicone, {}};
  CHECK(oracle_gauge<3>(bicone, DVec<3>(3, 4, 2)) == doctest::Approx(7.0));

  // Polytopal gauge via exhaustive facet enumeration: diamond.
  OracleNorm<2> dia{NormKind::polytopal,
                    {DVec<2>(1, 0), DVec<2>(-1, 0), DVec<2>(0, 1), DVec<2>(0, -1)}};
  CHECK(oracle_gauge<2>(dia, DVec<2>(0.5, 0.25)) == doctest::Approx(0.75));
  CHECK(oracle_dual_sup<2>(dia, DVec<2>(3, 1)) == doctest::Approx(3.0));
}

TEST_CASE("oracle diameter") {
  OracleNorm<3> l1{NormKind::l1, {}};
  CHECK(oracle_diameter<3>(l1, tetra_vertices()) == doctest::Approx(4.0));

  // Euclidean disk sampled as a point cloud: diameter 2 within coarse grid.
  OracleNorm<2> l2{NormKind::l2, {}};
  std::vector<DVec<2>> disk;
  for (int k = 0; k < 100; ++k) {
    const double th = 2.0 * M_PI * k / 100;
    disk.push_back(DVec<2>(std::cos(th), std::sin(th)));
  }
  CHECK(oracle_diameter<2>(l2, disk) == doctest::Approx(2.0).epsilon(1e-2));

  std::vector<DVec<2>> seg = {DVec<2>(-1, 0), DVec<2>(1, 0)};
  CHECK(oracle_diameter<2>(l2, seg) == doctest::Approx(2.0));
}

TEST_CASE("oracle eta membership") {
  OracleNorm<2> l1{NormKind::l1, {}};
  std::vector<DVec<2>> seg = {DVec<2>(-1, 0), DVec<2>(1, 0)};
  CHECK(oracle_eta_membership<2>(l1, seg, DVec<2>(0, 1)));
  CHECK_FALSE(oracle_eta_membership<2>(l1, seg, DVec<2>(0, 1.01)));
  CHECK(oracle_eta_membership<2>(l1, seg, DVec<2>(0.5, 0)));
}

TEST_CASE("oracle constant width") {
  OracleNorm<3> l1{NormKind::l1, {}};
  std::vector<DVec<3>> ball = {DVec<3>(1, 0, 0),  DVec<3>(-1, 0, 0), DVec<3>(0, 1, 0),
                               DVec<3>(0, -1, 0), DVec<3>(0, 0, 1),  DVec<3>(0, 0, -1)};
  CHECK(oracle_constant_width<3>(l1, ball));
  CHECK_FALSE(oracle_constant_width<3>(l1, tetra_vertices()));

  // Classical construction: a Reuleaux point cloud has constant width ~1.
  OracleNorm<2> l2{NormKind::l2, {}};
  std::vector<DVec<2>> reuleaux;
  const std::vector<DVec<2>> corners = {DVec<2>(0, 0), DVec<2>(1, 0),
                                        DVec<2>(0.5, std::sqrt(3.0) / 2)};
  for (int c = 0; c < 3; ++c) {
    const DVec<2> center = corners[c];
    const DVec<2> from = corners[(c + 1) % 3] - center;
    const double base = std::atan2(from(1), from(0));
    for (int k = 0; k <= 60; ++k) {
      const double th = base + (M_PI / 3.0) * k / 60;
      reuleaux.push_back(center + DVec<2>(std::cos(th), std::sin(th)));
    }
  }
  CHECK(oracle_constant_width<2>(l2, reuleaux, 256, 1e-3));
}

TEST_CASE("oracle agrees with the exact modules on the tetrahedron") {
  const auto n = Norm<Rat, 3>::l1();
  const auto t = convex_hull<Rat, 3>({Vec<Rat, 3>(Rat(-1), Rat(-1), Rat(-1)),
                                      Vec<Rat, 3>(Rat(1), Rat(1), Rat(-1)),
                                      Vec<Rat, 3>(Rat(1), Rat(-1), Rat(1)),
                                      Vec<Rat, 3>(Rat(-1), Rat(1), Rat(1))});
  const auto view = oracle_norm_view(n);
  CHECK(oracle_diameter<3>(view, tetra_vertices()) ==
        doctest::Approx(ScalarTraits<Rat>::to_double(diameter(n, t).value)));
  CHECK(oracle_constant_width<3>(view, tetra_vertices()) == is_constant_width(n, t).holds);

  // Membership agreement outside the boundary band on jittered points.
  const auto eta = wide_spherical_hull(n, t);
  GridSpec grid;
  grid.lo = Eigen::Vector3d(-5, -5, -5);
  grid.hi = Eigen::Vector3d(5, 5, 5);
  const double spacing = 10.0 / grid.resolution;
  int checked = 0;
  for (const auto& x : sample_box_points<3>(grid, 1000)) {
    Vec<Rat, 3> xr;
    for (int i = 0; i < 3; ++i) xr(i) = Rat(std::lround(x(i) * 1024), 1024);
    DVec<3> xd;
    for (int i = 0; i < 3; ++i) xd(i) = ScalarTraits<Rat>::to_double(xr(i));
    const double margin =
        ScalarTraits<Rat>::to_double(farthest_distance(n, t, xr)) - 4.0;
    if (std::abs(margin) <= 2.0 * spacing) continue;
    ++checked;
    CHECK(contains(eta.hull, xr) == oracle_eta_membership<3>(view, tetra_vertices(), xd));
  }
  CHECK(checked > 800);
}

TEST_SUITE_END();
