#pragma once

// Brute-force floating-point reference implementations for differential
// testing. Deliberately independent of the exact modules: gauges come from
// closed forms (named norms) or exhaustive facet enumeration over ball
// vertices (polytopal norms), hulls are never built incrementally here.

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "widthlab/norms.hpp"

namespace widthlab {
namespace oracle {

template <int D>
using DVec = Eigen::Matrix<double, D, 1>;

struct GridSpec {
  Eigen::Vector3d lo = Eigen::Vector3d(-3, -3, -3);
  Eigen::Vector3d hi = Eigen::Vector3d(3, 3, 3);
  int resolution = 201;
  unsigned seed = 12345;
};

template <int D>
struct OracleNorm {
  NormKind kind = NormKind::polytopal;
  std::vector<DVec<D>> ball_vertices;  // used only for polytopal kind
};

template <typename S, int D>
OracleNorm<D> oracle_norm_view(const Norm<S, D>& n) {
  OracleNorm<D> out;
  out.kind = n.kind();
  if (n.is_polytopal() && n.kind() == NormKind::polytopal) {
    for (const auto& v : n.ball().vertices) {
      DVec<D> p;
      for (int i = 0; i < D; ++i) p(i) = ScalarTraits<S>::to_double(v(i));
      out.ball_vertices.push_back(p);
    }
  }
  return out;
}

namespace detail {

// Exhaustive facet enumeration: every D-subset whose hyperplane has all
// points on one side is a facet. Quadratic/cubic and proud of it.
template <int D>
std::vector<std::pair<DVec<D>, double>> brute_facets(const std::vector<DVec<D>>& pts, double eps = 1e-9) {
  std::vector<std::pair<DVec<D>, double>> out;
  const int n = static_cast<int>(pts.size());
  auto consider = [&](DVec<D> normal, const DVec<D>& anchor) {
    const double len = normal.norm();
    if (len < eps) return;
    normal /= len;
    const double b = normal.dot(anchor);
    bool all_below = true, all_above = true;
    for (const auto& p : pts) {
      const double val = normal.dot(p) - b;
      if (val > eps) all_below = false;
      if (val < -eps) all_above = false;
    }
    for (int pass = 0; pass < 2; ++pass) {
      const bool keep = pass == 0 ? all_below : all_above;
      const DVec<D> nn = pass == 0 ? normal : DVec<D>(-normal);
      const double bb = pass == 0 ? b : -b;
      if (!keep) continue;
      bool dup = false;
      for (const auto& f : out) {
        if ((f.first - nn).norm() < 1e-7 && std::abs(f.second - bb) < 1e-7) dup = true;
      }
      if (!dup) out.emplace_back(nn, bb);
    }
  };
  if constexpr (D == 2) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const DVec<2> d = pts[j] - pts[i];
        consider(DVec<2>(d(1), -d(0)), pts[i]);
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          const DVec<3> normal = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
          consider(normal, pts[i]);
        }
      }
    }
  }
  return out;
}

template <int D>
const std::vector<std::pair<DVec<D>, double>>& cached_ball_facets(const OracleNorm<D>& n) {
  thread_local std::vector<DVec<D>> key;
  thread_local std::vector<std::pair<DVec<D>, double>> cache;
  bool same = key.size() == n.ball_vertices.size();
  for (std::size_t i = 0; same && i < key.size(); ++i) {
    if ((key[i] - n.ball_vertices[i]).norm() > 0) same = false;
  }
  if (!same) {
    key = n.ball_vertices;
    cache = brute_facets<D>(n.ball_vertices);
  }
  return cache;
}

}  // namespace detail

template <int D>
double oracle_gauge(const OracleNorm<D>& n, const DVec<D>& x) {
  switch (n.kind) {
    case NormKind::l1: {
      double s = 0;
      for (int i = 0; i < D; ++i) s += std::abs(x(i));
      return s;
    }
    case NormKind::linf: {
      double s = 0;
      for (int i = 0; i < D; ++i) s = std::max(s, std::abs(x(i)));
      return s;
    }
    case NormKind::l2:
      return x.norm();
    case NormKind::bicone:
      if constexpr (D == 3) return std::hypot(x(0), x(1)) + std::abs(x(2));
      return x.norm();
    case NormKind::polytopal: {
      double g = 0;
      for (const auto& [normal, b] : detail::cached_ball_facets<D>(n)) {
        if (b > 1e-12) g = std::max(g, normal.dot(x) / b);
      }
      return g;
    }
  }
  return 0;
}

/// sup over the unit ball of <a, x> (dual norm of a).
template <int D>
double oracle_dual_sup(const OracleNorm<D>& n, const DVec<D>& a) {
  switch (n.kind) {
    case NormKind::l1: {
      double s = 0;
      for (int i = 0; i < D; ++i) s = std::max(s, std::abs(a(i)));
      return s;
    }
    case NormKind::linf: {
      double s = 0;
      for (int i = 0; i < D; ++i) s += std::abs(a(i));
      return s;
    }
    case NormKind::l2:
      return a.norm();
    case NormKind::bicone:
      if constexpr (D == 3) return std::max(std::hypot(a(0), a(1)), std::abs(a(2)));
      return a.norm();
    case NormKind::polytopal: {
      double s = -std::numeric_limits<double>::max();
      for (const auto& v : n.ball_vertices) s = std::max(s, a.dot(v));
      return s;
    }
  }
  return 0;
}

/// Boundary + vertex samples of a body given by its vertex list.
template <int D>
std::vector<DVec<D>> boundary_samples(const std::vector<DVec<D>>& body, int count, unsigned seed) {
  std::vector<DVec<D>> out = body;
  if (body.size() < 2) return out;
  const auto facets = detail::brute_facets<D>(body);
  DVec<D> c = DVec<D>::Zero();
  for (const auto& v : body) c += v;
  c /= static_cast<double>(body.size());
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < count; ++i) {
    DVec<D> d;
    for (int j = 0; j < D; ++j) d(j) = gauss(rng);
    if (d.norm() < 1e-9) continue;
    d /= d.norm();
    double t = std::numeric_limits<double>::max();
    for (const auto& [normal, b] : facets) {
      const double den = normal.dot(d);
      if (den > 1e-12) t = std::min(t, (b - normal.dot(c)) / den);
    }
    if (t < std::numeric_limits<double>::max()) out.push_back(c + t * d);
  }
  return out;
}

/// Diameter by dense boundary sampling + pairwise max. Exact on polytopes
/// whenever the sample set contains the vertices (it always does).
template <int D>
double oracle_diameter(const OracleNorm<D>& n, const std::vector<DVec<D>>& body, const GridSpec& grid = {}) {
  const auto samples = boundary_samples<D>(body, std::min(grid.resolution * 2, 600), grid.seed);
  double best = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      best = std::max(best, oracle_gauge<D>(n, DVec<D>(samples[i] - samples[j])));
    }
  }
  return best;
}

/// Membership in eta(K): max over vertices of ||x - v|| <= diam K.
template <int D>
bool oracle_eta_membership(const OracleNorm<D>& n, const std::vector<DVec<D>>& body, const DVec<D>& x,
                           double tol = 1e-9) {
  double diam = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    for (std::size_t j = i + 1; j < body.size(); ++j) {
      diam = std::max(diam, oracle_gauge<D>(n, DVec<D>(body[i] - body[j])));
    }
  }
  for (const auto& v : body) {
    if (oracle_gauge<D>(n, DVec<D>(x - v)) > diam + tol) return false;
  }
  return true;
}

/// Sampled constant-width verdict: widths over random dual-unit directions
/// (plus ball facet normals for polytopal norms) against the diameter.
template <int D>
bool oracle_constant_width(const OracleNorm<D>& n, const std::vector<DVec<D>>& body, int directions = 512,
                           double tol = 1e-9, unsigned seed = 54321) {
  const double diam = oracle_diameter<D>(n, body);
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<DVec<D>> dirs;
  for (int i = 0; i < directions; ++i) {
    DVec<D> d;
    for (int j = 0; j < D; ++j) d(j) = gauss(rng);
    if (d.norm() > 1e-9) dirs.push_back(d);
  }
  if (n.kind == NormKind::polytopal) {
    for (const auto& [normal, b] : detail::cached_ball_facets<D>(n)) dirs.push_back(normal);
  }
  for (auto& d : dirs) {
    const double h = oracle_dual_sup<D>(n, d);
    d /= h;  // dual-unit
    double lo = std::numeric_limits<double>::max(), hi = -lo;
    for (const auto& v : body) {
      const double val = d.dot(v);
      lo = std::min(lo, val);
      hi = std::max(hi, val);
    }
    if (std::abs((hi - lo) - diam) > tol) return false;
  }
  return true;
}

/// Deterministic jittered sample points in the grid box (for membership
/// cross-checks).
template <int D>
std::vector<DVec<D>> sample_box_points(const GridSpec& grid, int count) {
  std::mt19937 rng(grid.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<DVec<D>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    DVec<D> p;
    for (int j = 0; j < D; ++j) p(j) = grid.lo(j) + (grid.hi(j) - grid.lo(j)) * uni(rng);
    out.push_back(p);
  }
  return out;
}

}  // namespace oracle
}  // namespace widthlab
