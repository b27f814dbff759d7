#pragma once

// Seeded random norms and bodies shared by the property suite and the
// acceptance runner.

#include <random>

#include "widthlab/norms.hpp"

namespace widthlab::testing {

inline Rat random_coord(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-8, 8);
  return Rat(num(rng), 4);
}

/// Symmetric convex polygon norm from random generators (hexagon when the
/// three generators are in convex position, quadrilateral otherwise).
inline Norm<Rat, 2> random_symmetric_norm(std::mt19937& rng) {
  using V2 = Vec<Rat, 2>;
  for (;;) {
    std::vector<V2> pts;
    for (int i = 0; i < 3; ++i) {
      const V2 p(random_coord(rng) + Rat(1, 8), random_coord(rng) - Rat(1, 8));
      pts.push_back(p);
      pts.push_back(V2(-p));
    }
    try {
      const auto hull = convex_hull<Rat, 2>(pts);
      if (hull.affine_dim == 2) return Norm<Rat, 2>::polytopal(hull);
    } catch (const GeomError&) {
    }
  }
}

inline Polytope<Rat, 2> random_body(std::mt19937& rng, bool segment) {
  using V2 = Vec<Rat, 2>;
  for (;;) {
    std::vector<V2> pts;
    const int count = segment ? 2 : 3;
    for (int i = 0; i < count; ++i) pts.push_back(V2(random_coord(rng), random_coord(rng)));
    const auto hull = convex_hull<Rat, 2>(pts);
    if (hull.vertices.size() >= 2) return hull;
  }
}

}  // namespace widthlab::testing
