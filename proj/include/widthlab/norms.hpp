#pragma once

// Gauge evaluation and ball construction. l1/linf materialize exact
// polytopal unit balls (cross-polytope / cube); l2 and the bicone stay
// analytic and only make sense on the double lane.

#include <cmath>
#include <optional>
#include <vector>

#include "widthlab/geometry.hpp"

namespace widthlab {

enum class NormKind { polytopal, l1, l2, linf, bicone };

inline const char* norm_kind_name(NormKind k) {
  switch (k) {
    case NormKind::polytopal: return "polytopal";
    case NormKind::l1: return "l1";
    case NormKind::l2: return "l2";
    case NormKind::linf: return "linf";
    case NormKind::bicone: return "bicone";
  }
  return "unknown";
}

namespace detail {

template <typename S, int D>
std::vector<Vec<S, D>> cross_polytope_vertices() {
  std::vector<Vec<S, D>> pts;
  for (int i = 0; i < D; ++i) {
    for (int sgn : {-1, 1}) {
      Vec<S, D> e = Vec<S, D>::Zero();
      e(i) = S(sgn);
      pts.push_back(e);
    }
  }
  return pts;
}

template <typename S, int D>
std::vector<Vec<S, D>> cube_vertices() {
  std::vector<Vec<S, D>> pts;
  const int count = 1 << D;
  for (int mask = 0; mask < count; ++mask) {
    Vec<S, D> p;
    for (int i = 0; i < D; ++i) p(i) = S((mask >> i) & 1 ? 1 : -1);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace detail

template <typename S, int D>
class Norm {
 public:
  static Norm polytopal(Polytope<S, D> ball) {
    validate_ball(ball);
    return Norm(NormKind::polytopal, std::move(ball));
  }
  static Norm l1() { return Norm(NormKind::l1, convex_hull<S, D>(detail::cross_polytope_vertices<S, D>())); }
  static Norm linf() { return Norm(NormKind::linf, convex_hull<S, D>(detail::cube_vertices<S, D>())); }
  static Norm l2() {
    static_assert(!ScalarTraits<S>::exact, "the l2 norm is analytic; use the double lane");
    return Norm(NormKind::l2, std::nullopt);
  }
  static Norm bicone() {
    static_assert(!ScalarTraits<S>::exact && D == 3, "the bicone norm is analytic and 3-dimensional");
    return Norm(NormKind::bicone, std::nullopt);
  }

  NormKind kind() const { return kind_; }
  bool is_polytopal() const { return ball_.has_value(); }
  const Polytope<S, D>& ball() const {
    if (!ball_) throw GeomError(GeomErrc::unsupported_norm, "analytic norm has no polytopal unit ball");
    return *ball_;
  }

 private:
  Norm(NormKind kind, std::optional<Polytope<S, D>> ball) : kind_(kind), ball_(std::move(ball)) {}

  static void validate_ball(const Polytope<S, D>& ball) {
    if (!ball.full_dimensional())
      throw GeomError(GeomErrc::precondition, "unit ball must be full-dimensional");
    for (const auto& f : ball.facets) {
      if (ScalarTraits<S>::sign(f.offset) <= 0)
        throw GeomError(GeomErrc::precondition, "unit ball must contain 0 in its interior");
    }
    for (const auto& v : ball.vertices) {
      const Vec<S, D> neg = -v;
      bool found = false;
      for (const auto& w : ball.vertices) {
        if (vec_eq<S, D>(w, neg)) {
          found = true;
          break;
        }
      }
      if (!found) throw GeomError(GeomErrc::precondition, "unit ball must be centrally symmetric");
    }
  }

  NormKind kind_;
  std::optional<Polytope<S, D>> ball_;
};

/// Gauge of x. Polytopal: max over facets of <a,x>/b. Analytic: closed form.
template <typename S, int D>
S norm_eval(const Norm<S, D>& n, const Vec<S, D>& x) {
  if (n.is_polytopal()) {
    S best = S(0);
    for (const auto& f : n.ball().facets) {
      const S val = S(f.normal.dot(x) / f.offset);
      if (best < val) best = val;
    }
    return best;
  }
  if constexpr (!ScalarTraits<S>::exact) {
    switch (n.kind()) {
      case NormKind::l2: {
        S acc = S(0);
        for (int i = 0; i < D; ++i) acc += x(i) * x(i);
        return std::sqrt(acc);
      }
      case NormKind::bicone:
        if constexpr (D == 3) return std::hypot(x(0), x(1)) + std::abs(x(2));
        break;
      default:
        break;
    }
  }
  throw GeomError(GeomErrc::unsupported_norm, "norm_eval: unsupported norm/scalar combination");
}

/// sup{<a,x> : x in unit ball} — the dual norm of a.
template <typename S, int D>
S dual_norm(const Norm<S, D>& n, const Vec<S, D>& a) {
  if (n.is_polytopal()) {
    S best = a.dot(n.ball().vertices.front());
    for (const auto& v : n.ball().vertices) best = std::max(best, S(a.dot(v)), [](const S& x, const S& y) { return x < y; });
    return best;
  }
  if constexpr (!ScalarTraits<S>::exact) {
    switch (n.kind()) {
      case NormKind::l2: {
        S acc = S(0);
        for (int i = 0; i < D; ++i) acc += a(i) * a(i);
        return std::sqrt(acc);
      }
      case NormKind::bicone:
        if constexpr (D == 3) return std::max(std::hypot(a(0), a(1)), std::abs(a(2)));
        break;
      default:
        break;
    }
  }
  throw GeomError(GeomErrc::unsupported_norm, "dual_norm: unsupported norm/scalar combination");
}

template <typename S, int D>
struct Ball {
  Vec<S, D> center;
  S radius;
  std::optional<Polytope<S, D>> materialized;  // present iff the norm is polytopal
};

template <typename S, int D>
Ball<S, D> make_ball(const Norm<S, D>& n, const Vec<S, D>& c, const S& r) {
  if (ScalarTraits<S>::sign(r) < 0) throw GeomError(GeomErrc::precondition, "negative ball radius");
  Ball<S, D> out{c, r, std::nullopt};
  if (n.is_polytopal()) out.materialized = scale_translate<S, D>(n.ball(), r, c);
  return out;
}

/// Halfspaces of B(c, r) for a polytopal norm, without materializing the
/// polytope: facet (a, b) of the unit ball shifts to <a,x> <= r*b + <a,c>.
template <typename S, int D>
void append_ball_facets(const Norm<S, D>& n, const Vec<S, D>& c, const S& r,
                        std::vector<Halfspace<S, D>>& out) {
  for (const auto& f : n.ball().facets) {
    out.push_back({f.normal, S(r * f.offset + f.normal.dot(c))});
  }
}

template <typename S, int D>
struct DualFunctional {
  Vec<S, D> a;  // f(x) = <a, x>, scaled so sup over the unit ball is 1
};

struct SampleSpec {
  int directions_2d = 720;
  int directions_3d = 2562;
};

/// Polytopal: the extreme points of the dual ball (facet normals scaled to
/// offset 1), a finite set that determines every width. Analytic: a
/// deterministic sampler normalized to dual norm 1.
template <typename S, int D>
std::vector<DualFunctional<S, D>> dual_unit_functionals(const Norm<S, D>& n, const SampleSpec& spec = {}) {
  std::vector<DualFunctional<S, D>> out;
  if (n.is_polytopal()) {
    for (const auto& f : n.ball().facets) out.push_back({Vec<S, D>(f.normal / f.offset)});
    return out;
  }
  if constexpr (!ScalarTraits<S>::exact) {
    if constexpr (D == 2) {
      const int N = spec.directions_2d;
      for (int k = 0; k < N; ++k) {
        const double th = 2.0 * M_PI * k / N;
        Vec<S, 2> d;
        d << std::cos(th), std::sin(th);
        out.push_back({Vec<S, 2>(d / dual_norm(n, d))});
      }
    } else {
      // Spherical Fibonacci set: deterministic, roughly uniform.
      const int N = spec.directions_3d;
      const double golden = M_PI * (3.0 - std::sqrt(5.0));
      for (int k = 0; k < N; ++k) {
        const double z = 1.0 - 2.0 * (k + 0.5) / N;
        const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double th = golden * k;
        Vec<S, 3> d;
        d << rxy * std::cos(th), rxy * std::sin(th), z;
        out.push_back({Vec<S, 3>(d / dual_norm(n, d))});
      }
    }
    return out;
  }
  throw GeomError(GeomErrc::unsupported_norm, "dual_unit_functionals: unsupported norm/scalar combination");
}

/// True iff u is an extreme point of the unit ball. Requires ||u|| = 1.
template <typename S, int D>
bool is_unit_ball_vertex(const Norm<S, D>& n, const Vec<S, D>& u) {
  if (!ScalarTraits<S>::eq(norm_eval(n, u), S(1)))
    throw GeomError(GeomErrc::precondition, "is_unit_ball_vertex: u is not a unit vector");
  if (n.is_polytopal()) {
    for (const auto& v : n.ball().vertices) {
      if (vec_eq<S, D>(v, u)) return true;
    }
    return false;
  }
  if constexpr (!ScalarTraits<S>::exact) {
    if (n.kind() == NormKind::l2) return true;  // every boundary point is extreme
    if constexpr (D == 3) {
      if (n.kind() == NormKind::bicone) {
        const bool pole = ScalarTraits<S>::eq(std::abs(u(2)), S(1));
        const bool equator = ScalarTraits<S>::sign(u(2)) == 0 && ScalarTraits<S>::eq(std::hypot(u(0), u(1)), S(1));
        return pole || equator;
      }
    }
  }
  throw GeomError(GeomErrc::unsupported_norm, "is_unit_ball_vertex: unsupported norm/scalar combination");
}

}  // namespace widthlab
