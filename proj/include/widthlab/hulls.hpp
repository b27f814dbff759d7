#pragma once

// Wide and tight spherical hulls. For polytopal norms both hulls are exact
// polytopes (ball-facet translates intersected over vertices); for analytic
// norms only membership predicates and sampled boundary estimates exist.
// Both hulls use radius diam(K) — the tight hull must NOT use diam(eta(K)).

#include <vector>

#include "widthlab/metrics.hpp"

namespace widthlab {

enum class HullKind { wide, tight };

template <typename S, int D>
struct HullResult {
  Polytope<S, D> hull;
  S base_diameter;
  HullKind kind;
  std::vector<Vec<S, D>> centers;            // ball centers that generated the hull
  std::vector<std::vector<int>> facet_from;  // per hull facet: indices into centers
};

namespace detail {

template <typename S, int D>
HullResult<S, D> spherical_hull(const Norm<S, D>& n, const std::vector<Vec<S, D>>& centers,
                                const S& radius, HullKind kind) {
  std::vector<Halfspace<S, D>> hs;
  hs.reserve(centers.size() * n.ball().facets.size());
  for (const auto& c : centers) append_ball_facets(n, c, radius, hs);
  HullResult<S, D> out{intersect_halfspaces<S, D>(hs), radius, kind, centers, {}};
  // Provenance: which center(s) produced each surviving facet.
  out.facet_from.resize(out.hull.facets.size());
  for (std::size_t fi = 0; fi < out.hull.facets.size(); ++fi) {
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
      for (const auto& bf : n.ball().facets) {
        Halfspace<S, D> moved{bf.normal, S(radius * bf.offset + bf.normal.dot(centers[ci]))};
        if (halfspace_eq<S, D>(normalize_halfspace<S, D>(moved), out.hull.facets[fi])) {
          out.facet_from[fi].push_back(static_cast<int>(ci));
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// eta(K): intersection of balls of radius diam(K) centered at the vertices
/// of K (the max of the gauge over K is attained at vertices).
template <typename S, int D>
HullResult<S, D> wide_spherical_hull(const Norm<S, D>& n, const Polytope<S, D>& k) {
  if (!n.is_polytopal())
    throw GeomError(GeomErrc::unsupported_norm,
                    "wide_spherical_hull: analytic norm; use eta_contains / sampled estimates");
  if (k.trivial()) throw GeomError(GeomErrc::precondition, "wide_spherical_hull: trivial body");
  const S diam = diameter(n, k).value;
  return detail::spherical_hull(n, k.vertices, diam, HullKind::wide);
}

/// tau(K): intersection of balls of radius diam(K) centered at the vertices
/// of eta(K).
template <typename S, int D>
HullResult<S, D> tight_spherical_hull(const Norm<S, D>& n, const Polytope<S, D>& k) {
  if (!n.is_polytopal())
    throw GeomError(GeomErrc::unsupported_norm,
                    "tight_spherical_hull: analytic norm; use tau_contains_estimate");
  if (k.trivial()) throw GeomError(GeomErrc::precondition, "tight_spherical_hull: trivial body");
  const S diam = diameter(n, k).value;
  const HullResult<S, D> eta = detail::spherical_hull(n, k.vertices, diam, HullKind::wide);
  return detail::spherical_hull(n, eta.hull.vertices, diam, HullKind::tight);
}

/// Membership in eta(K) for any norm: ||x - v|| <= diam(K) over vertices.
template <typename S, int D>
bool eta_contains(const Norm<S, D>& n, const Polytope<S, D>& k, const Vec<S, D>& x) {
  const S diam = diameter(n, k).value;
  for (const auto& v : k.vertices) {
    if (!ScalarTraits<S>::leq(norm_eval(n, Vec<S, D>(x - v)), diam)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sampled machinery for analytic norms (double lane).

struct SamplingOptions {
  int coarse_directions = 720;
  int refine_rounds = 30;
  int refine_samples = 48;
  int bisection_steps = 60;
};

/// Boundary point of eta(K) along direction d from an interior anchor
/// (vertex centroid): bisection on the monotone membership predicate.
template <int D>
Vec<double, D> eta_boundary_point(const Norm<double, D>& n, const Polytope<double, D>& k,
                                  const Vec<double, D>& anchor, const Vec<double, D>& d,
                                  double diam, int steps) {
  auto inside = [&](double t) {
    const Vec<double, D> x = anchor + t * d;
    for (const auto& v : k.vertices) {
      if (norm_eval(n, Vec<double, D>(x - v)) > diam) return false;
    }
    return true;
  };
  double lo = 0.0, hi = 1.0;
  while (inside(hi)) hi *= 2.0;
  for (int i = 0; i < steps; ++i) {
    const double mid = (lo + hi) / 2.0;
    (inside(mid) ? lo : hi) = mid;
  }
  return anchor + lo * d;
}

template <int D>
std::vector<Vec<double, D>> eta_boundary_samples(const Norm<double, D>& n, const Polytope<double, D>& k,
                                                 int count, const SamplingOptions& opt = {}) {
  Vec<double, D> anchor = Vec<double, D>::Zero();
  for (const auto& v : k.vertices) anchor += v;
  anchor /= static_cast<double>(k.vertices.size());
  const double diam = diameter(n, k).value;
  std::vector<Vec<double, D>> out;
  out.reserve(count);
  if constexpr (D == 2) {
    for (int i = 0; i < count; ++i) {
      const double th = 2.0 * M_PI * i / count;
      Vec<double, 2> d;
      d << std::cos(th), std::sin(th);
      out.push_back(eta_boundary_point<2>(n, k, anchor, d, diam, opt.bisection_steps));
    }
  } else {
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / count;
      const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
      Vec<double, 3> d;
      d << rxy * std::cos(golden * i), rxy * std::sin(golden * i), z;
      out.push_back(eta_boundary_point<3>(n, k, anchor, d, diam, opt.bisection_steps));
    }
  }
  return out;
}

/// diam(eta(K)) estimate: coarse boundary sampling, then local refinement
/// around the best pair (the diameter of a convex body is attained on the
/// boundary). Converges well below 1e-6 on the corpus bodies.
template <int D>
double eta_diameter_estimate(const Norm<double, D>& n, const Polytope<double, D>& k,
                             const SamplingOptions& opt = {}) {
  Vec<double, D> anchor = Vec<double, D>::Zero();
  for (const auto& v : k.vertices) anchor += v;
  anchor /= static_cast<double>(k.vertices.size());
  const double diam = diameter(n, k).value;

  auto boundary = [&](const Vec<double, D>& d) {
    return eta_boundary_point<D>(n, k, anchor, d, diam, opt.bisection_steps);
  };
  auto dir_of = [&](int i, int count) {
    if constexpr (D == 2) {
      const double th = 2.0 * M_PI * i / count;
      return Vec<double, 2>(std::cos(th), std::sin(th));
    } else {
      const double golden = M_PI * (3.0 - std::sqrt(5.0));
      const double z = 1.0 - 2.0 * (i + 0.5) / count;
      const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
      Vec<double, 3> d;
      d << rxy * std::cos(golden * i), rxy * std::sin(golden * i), z;
      return d;
    }
  };

  const int N = opt.coarse_directions;
  std::vector<Vec<double, D>> dirs(N), pts(N);
  for (int i = 0; i < N; ++i) {
    dirs[i] = dir_of(i, N);
    pts[i] = boundary(dirs[i]);
  }
  double best = 0.0;
  Vec<double, D> da = dirs[0], db = dirs[0];
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      const double val = norm_eval(n, Vec<double, D>(pts[i] - pts[j]));
      if (val > best) {
        best = val;
        da = dirs[i];
        db = dirs[j];
      }
    }
  }
  // Alternating local refinement of the two directions.
  double radius = 2.0 * M_PI / N;
  for (int round = 0; round < opt.refine_rounds; ++round) {
    for (int side = 0; side < 2; ++side) {
      Vec<double, D>& dref = side == 0 ? da : db;
      const Vec<double, D> fixed_pt = boundary(side == 0 ? db : da);
      Vec<double, D> best_dir = dref;
      for (int s = 0; s < opt.refine_samples; ++s) {
        Vec<double, D> cand;
        if constexpr (D == 2) {
          const double base = std::atan2(dref(1), dref(0));
          const double th = base + radius * (2.0 * s / (opt.refine_samples - 1) - 1.0);
          cand = Vec<double, 2>(std::cos(th), std::sin(th));
        } else {
          cand = dref + radius * dir_of(s, opt.refine_samples);
          cand /= std::sqrt(cand.dot(cand));
        }
        const double val = norm_eval(n, Vec<double, D>(boundary(cand) - fixed_pt));
        if (val > best) {
          best = val;
          best_dir = cand;
        }
      }
      dref = best_dir;
    }
    radius *= 0.6;
  }
  return best;
}

/// Membership in tau(K) for analytic norms, estimated from eta boundary
/// samples (the farthest center from x lies on the boundary of eta).
template <int D>
bool tau_contains_estimate(const Norm<double, D>& n, const Polytope<double, D>& k,
                           const Vec<double, D>& x, int samples = 2000) {
  const double diam = diameter(n, k).value;
  for (const auto& c : eta_boundary_samples<D>(n, k, samples)) {
    if (norm_eval(n, Vec<double, D>(x - c)) > diam + numeric_tolerance()) return false;
  }
  return true;
}

inline Eigen::Vector3d fibonacci_direction(int i, int n) {
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - 2.0 * (i + 0.5) / n;
  const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rxy * std::cos(golden * i), rxy * std::sin(golden * i), z};
}

/// Support value sup{<f,x> : x in eta(K)}: coarse scan over boundary rays,
/// then golden-section refinement (a linear functional on the boundary of a
/// convex body is cyclically unimodal).
template <int D>
double eta_support_estimate(const Norm<double, D>& n, const Polytope<double, D>& k,
                            const Vec<double, D>& f, const SamplingOptions& opt = {}) {
  Vec<double, D> anchor = Vec<double, D>::Zero();
  for (const auto& v : k.vertices) anchor += v;
  anchor /= static_cast<double>(k.vertices.size());
  const double diam = diameter(n, k).value;
  auto value = [&](const Vec<double, D>& d) {
    return f.dot(eta_boundary_point<D>(n, k, anchor, d, diam, opt.bisection_steps));
  };
  if constexpr (D == 2) {
    const int N = 256;
    double best = -std::numeric_limits<double>::max(), best_th = 0;
    for (int i = 0; i < N; ++i) {
      const double th = 2.0 * M_PI * i / N;
      const double val = value(Vec<double, 2>(std::cos(th), std::sin(th)));
      if (val > best) {
        best = val;
        best_th = th;
      }
    }
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_th - 2.0 * M_PI / N, hi = best_th + 2.0 * M_PI / N;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = value(Vec<double, 2>(std::cos(x1), std::sin(x1)));
    double f2 = value(Vec<double, 2>(std::cos(x2), std::sin(x2)));
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = value(Vec<double, 2>(std::cos(x2), std::sin(x2)));
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = value(Vec<double, 2>(std::cos(x1), std::sin(x1)));
      }
    }
    return std::max(f1, f2);
  } else {
    // Coarse Fibonacci scan, then shrinking local perturbation search.
    const int N = 512;
    Vec<double, 3> best_d;
    double best = -std::numeric_limits<double>::max();
    for (int i = 0; i < N; ++i) {
      const Vec<double, 3> d = fibonacci_direction(i, N);
      const double val = value(d);
      if (val > best) {
        best = val;
        best_d = d;
      }
    }
    double radius = 4.0 / std::sqrt(static_cast<double>(N));
    for (int round = 0; round < 40; ++round) {
      for (int s = 0; s < 24; ++s) {
        Vec<double, 3> cand = best_d + radius * fibonacci_direction(s, 24);
        cand /= cand.norm();
        const double val = value(cand);
        if (val > best) {
          best = val;
          best_d = cand;
        }
      }
      radius *= 0.7;
    }
    return best;
  }
}

/// Center minimizing the maximum gauge distance to the given points
/// (pattern search on the convex objective); used by the sampled ball test.
template <int D>
std::pair<Vec<double, D>, double> min_enclosing_center(const Norm<double, D>& n,
                                                       const std::vector<Vec<double, D>>& pts) {
  Vec<double, D> c = Vec<double, D>::Zero();
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  auto radius_at = [&](const Vec<double, D>& x) {
    double r = 0;
    for (const auto& p : pts) r = std::max(r, norm_eval(n, Vec<double, D>(x - p)));
    return r;
  };
  double best = radius_at(c);
  double step = 1.0 + best;
  while (step > 1e-12) {
    bool improved = false;
    for (int j = 0; j < D && !improved; ++j) {
      for (int sgn : {1, -1}) {
        Vec<double, D> cand = c;
        cand(j) += sgn * step;
        const double val = radius_at(cand);
        if (val < best) {
          best = val;
          c = cand;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {c, best};
}

}  // namespace widthlab
