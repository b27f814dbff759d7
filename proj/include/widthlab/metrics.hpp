#pragma once

// Scalar invariants of bodies: diameter, directional widths, circumradius,
// modulus of convexity. Exact on the rational lane for polytopal norms;
// sampled estimates (flagged) for analytic norms and the 3D modulus.

#include <limits>
#include <utility>
#include <vector>

#include "widthlab/lp.hpp"
#include "widthlab/norms.hpp"

namespace widthlab {

template <typename S, int D>
struct DiameterResult {
  S value = S(0);
  Vec<S, D> witness_a, witness_b;  // lexicographically smallest attaining pair
  bool trivial = false;            // singleton input
};

template <typename S, int D>
DiameterResult<S, D> diameter(const Norm<S, D>& n, const Polytope<S, D>& k) {
  DiameterResult<S, D> out;
  if (k.vertices.empty()) throw GeomError(GeomErrc::empty_input, "diameter of empty set");
  if (k.vertices.size() < 2) {
    out.witness_a = out.witness_b = k.vertices.front();
    out.trivial = true;
    return out;
  }
  bool first = true;
  const auto& vs = k.vertices;  // sorted, so the first maximizer is the lex-least pair
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const S d = norm_eval(n, Vec<S, D>(vs[j] - vs[i]));
      if (first || out.value < d) {
        out.value = d;
        out.witness_a = vs[i];
        out.witness_b = vs[j];
        first = false;
      }
    }
  }
  return out;
}

/// gamma(K, x): farthest gauge distance from x to K.
template <typename S, int D>
S farthest_distance(const Norm<S, D>& n, const Polytope<S, D>& k, const Vec<S, D>& x) {
  S best = S(0);
  bool first = true;
  for (const auto& v : k.vertices) {
    const S d = norm_eval(n, Vec<S, D>(x - v));
    if (first || best < d) {
      best = d;
      first = false;
    }
  }
  return best;
}

template <typename S, int D>
S width(const Norm<S, D>& n, const Polytope<S, D>& k, const DualFunctional<S, D>& f) {
  if (!ScalarTraits<S>::eq(dual_norm(n, f.a), S(1)))
    throw GeomError(GeomErrc::precondition, "width: functional is not dual-unit");
  S lo = f.a.dot(k.vertices.front()), hi = lo;
  for (const auto& v : k.vertices) {
    const S val = f.a.dot(v);
    if (val < lo) lo = val;
    if (hi < val) hi = val;
  }
  return S(hi - lo);
}

template <typename S, int D>
struct WidthReport {
  std::vector<std::pair<DualFunctional<S, D>, S>> widths;  // extreme / sampled functionals
  S min_width = S(0);   // true minimum over ALL dual-unit functionals (exact for polytopal)
  S max_width = S(0);   // equals the diameter
  S diam = S(0);
  DualFunctional<S, D> min_functional;
  Vec<S, D> diam_witness_a, diam_witness_b;
  Vec<S, D> min_witness_a, min_witness_b;  // vertex pair spanning the min width
};

/// Widths over the extreme dual functionals plus the true minimal width.
/// The max over extreme functionals is the diameter; the min over them is
/// NOT the minimal width (that infimum sits at interior dual directions),
/// so the minimal width is read off the facets of the difference body:
/// min over facets (a,b) of K-K of b / h_B(a).
template <typename S, int D>
WidthReport<S, D> width_report(const Norm<S, D>& n, const Polytope<S, D>& k, const SampleSpec& spec = {}) {
  WidthReport<S, D> out;
  const auto fs = dual_unit_functionals(n, spec);
  const auto diam = diameter(n, k);
  out.diam = diam.value;
  out.diam_witness_a = diam.witness_a;
  out.diam_witness_b = diam.witness_b;
  bool first = true;
  for (const auto& f : fs) {
    const S w = width(n, k, f);
    out.widths.emplace_back(f, w);
    if (first || w < out.min_width) {
      out.min_width = w;
      out.min_functional = f;
    }
    if (first || out.max_width < w) out.max_width = w;
    first = false;
  }
  if (n.is_polytopal()) {
    const auto diff = minkowski_sum(k, scale_translate(k, S(-1), Vec<S, D>(Vec<S, D>::Zero())));
    for (const auto& f : diff.facets) {
      const S h = dual_norm(n, f.normal);
      const S w = S(f.offset / h);
      if (w < out.min_width) {
        out.min_width = w;
        out.min_functional = DualFunctional<S, D>{Vec<S, D>(f.normal / h)};
      }
    }
    if (ScalarTraits<S>::exact && !ScalarTraits<S>::eq(out.max_width, out.diam))
      throw std::logic_error("width_report: max width disagrees with diameter");
  }
  bool lo_first = true, hi_first = true;
  S lo = S(0), hi = S(0);
  for (const auto& v : k.vertices) {
    const S val = out.min_functional.a.dot(v);
    if (lo_first || val < lo) {
      lo = val;
      out.min_witness_a = v;
      lo_first = false;
    }
    if (hi_first || hi < val) {
      hi = val;
      out.min_witness_b = v;
      hi_first = false;
    }
  }
  return out;
}

template <typename S, int D>
struct CircumradiusResult {
  S radius;
  Vec<S, D> center;
  bool exact = true;
};

/// min over x of max over vertices of ||x - v||. Polytopal: exact LP in
/// (x, r). Analytic: pattern-search estimate on the convex objective.
template <typename S, int D>
CircumradiusResult<S, D> circumradius(const Norm<S, D>& n, const Polytope<S, D>& k) {
  if (k.vertices.empty()) throw GeomError(GeomErrc::empty_input, "circumradius of empty set");
  if (n.is_polytopal()) {
    const auto& ball = n.ball();
    const int rows = static_cast<int>(ball.facets.size() * k.vertices.size());
    DynMatrix<S> A(rows, D + 1);
    DynVector<S> b(rows);
    int r = 0;
    for (const auto& f : ball.facets) {
      for (const auto& v : k.vertices) {
        for (int j = 0; j < D; ++j) A(r, j) = -f.normal(j);
        A(r, D) = -f.offset;
        b(r) = -f.normal.dot(v);
        ++r;
      }
    }
    DynVector<S> c = DynVector<S>::Zero(D + 1);
    c(D) = S(-1);
    const auto sol = lp_maximize<S>(A, b, c);
    if (sol.status != LpStatus::optimal) throw std::logic_error("circumradius LP must be solvable");
    CircumradiusResult<S, D> out;
    for (int j = 0; j < D; ++j) out.center(j) = sol.x(j);
    out.radius = sol.x(D);
    return out;
  }
  // Analytic: pattern search from the vertex centroid.
  Vec<S, D> c = Vec<S, D>::Zero();
  for (const auto& v : k.vertices) c += v;
  c /= S(static_cast<long>(k.vertices.size()));
  S step = S(1) + farthest_distance(n, k, c);
  S best = farthest_distance(n, k, c);
  while (step > S(1e-13)) {
    bool improved = false;
    for (int j = 0; j < D && !improved; ++j) {
      for (int sgn : {1, -1}) {
        Vec<S, D> cand = c;
        cand(j) += S(sgn) * step;
        const S val = farthest_distance(n, k, cand);
        if (val < best) {
          best = val;
          c = cand;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step /= S(2);
  }
  return {best, c, false};
}

// ---------------------------------------------------------------------------
// Modulus of convexity

template <typename S>
struct ConvexityProfile {
  std::vector<S> epsilons;
  std::vector<S> deltas;
  std::vector<char> delta_exact;  // per entry: exact value vs sampled estimate
  S eps0 = S(0);
  bool eps0_exact = false;
};

namespace detail {

// Clips a convex polygon (CCW) by <a,(s,t)> <= b, exactly.
template <typename S>
std::vector<Vec<S, 2>> clip_polygon(const std::vector<Vec<S, 2>>& poly, const Vec<S, 2>& a, const S& b) {
  std::vector<Vec<S, 2>> out;
  const int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) {
    const Vec<S, 2>& p = poly[i];
    const Vec<S, 2>& q = poly[(i + 1) % n];
    const S fp = a.dot(p) - b, fq = a.dot(q) - b;
    const int sp = ScalarTraits<S>::sign(fp), sq = ScalarTraits<S>::sign(fq);
    if (sp <= 0) out.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
      const S lam = S(fp / (fp - fq));
      out.push_back(Vec<S, 2>(p + lam * (q - p)));
    }
  }
  return out;
}

/// Longest segment contained in the unit sphere of a polytopal norm:
/// max ||p-q|| over vertex pairs whose midpoint still has gauge 1.
template <typename S, int D>
S longest_sphere_segment(const Norm<S, D>& n) {
  const auto& vs = n.ball().vertices;
  S best = S(0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Vec<S, D> mid = (vs[i] + vs[j]) / S(2);
      if (!ScalarTraits<S>::eq(norm_eval(n, mid), S(1))) continue;
      const S len = norm_eval(n, Vec<S, D>(vs[i] - vs[j]));
      if (best < len) best = len;
    }
  }
  return best;
}

/// Exact inf of 1 - ||(x+y)/2|| over boundary points with gauge(x-y) = eps,
/// 2D polytopal norms. Per (edge pair, active facet) the feasible (s,t) set
/// is a clipped segment or polygon and the objective is concave, so minima
/// sit on the candidate vertices.
template <typename S>
S delta_at_exact_2d(const Norm<S, 2>& n, const S& eps) {
  const auto ring = ccw_ring<S>(n.ball());
  const int ne = static_cast<int>(ring.size());
  const auto& facets = n.ball().facets;
  bool found = false;
  S best = S(0);

  auto consider = [&](const Vec<S, 2>& x, const Vec<S, 2>& y) {
    const S objective = S(1) - norm_eval(n, Vec<S, 2>((x + y) / S(2)));
    if (!found || objective < best) {
      best = objective;
      found = true;
    }
  };

  for (int e1 = 0; e1 < ne; ++e1) {
    const Vec<S, 2> p = ring[e1], q = ring[(e1 + 1) % ne];
    const Vec<S, 2> ex = q - p;
    for (int e2 = 0; e2 < ne; ++e2) {
      const Vec<S, 2> r = ring[e2], w = ring[(e2 + 1) % ne];
      const Vec<S, 2> ey = w - r;
      const Vec<S, 2> base = p - r;
      // diff(s,t) = base + s*ex - t*ey ; constraints <a_i, diff> <= eps.
      for (const auto& fa : facets) {
        const S alpha = fa.normal.dot(ex);
        const S beta = fa.normal.dot(ey);
        const S gamma = fa.normal.dot(base);
        const S target = S(eps * fa.offset);
        const bool degenerate_line = ScalarTraits<S>::sign(alpha) == 0 && ScalarTraits<S>::sign(beta) == 0;
        if (degenerate_line) {
          if (!ScalarTraits<S>::eq(gamma, target)) continue;
          // Whole box is on the active plane; clip it by the other facets.
          std::vector<Vec<S, 2>> poly = {Vec<S, 2>(S(0), S(0)), Vec<S, 2>(S(1), S(0)),
                                         Vec<S, 2>(S(1), S(1)), Vec<S, 2>(S(0), S(1))};
          for (const auto& fb : facets) {
            Vec<S, 2> coef;
            coef << fb.normal.dot(ex), S(-fb.normal.dot(ey));
            poly = clip_polygon<S>(poly, coef, S(eps * fb.offset - fb.normal.dot(base)));
            if (poly.empty()) break;
          }
          for (const auto& st : poly) consider(Vec<S, 2>(p + st(0) * ex), Vec<S, 2>(r + st(1) * ey));
          continue;
        }
        // Line alpha*s - beta*t = target - gamma, direction (beta, alpha).
        Vec<S, 2> p0;
        if (ScalarTraits<S>::sign(alpha) != 0) {
          p0 << S((target - gamma) / alpha), S(0);
        } else {
          p0 << S(0), S((gamma - target) / beta);
        }
        const Vec<S, 2> dir{beta, alpha};
        // Intersect the parametric line p0 + lam*dir with all constraints.
        bool empty = false;
        bool has_lo = false, has_hi = false;
        S lo = S(0), hi = S(0);
        auto add_constraint = [&](const Vec<S, 2>& coef, const S& bound) {
          if (empty) return;
          const S dc = coef.dot(dir);
          const S val = coef.dot(p0);
          const int sdc = ScalarTraits<S>::sign(dc);
          if (sdc == 0) {
            if (ScalarTraits<S>::sign(S(val - bound)) > 0) empty = true;
            return;
          }
          const S lam = S((bound - val) / dc);
          if (sdc > 0) {
            if (!has_hi || lam < hi) hi = lam, has_hi = true;
          } else {
            if (!has_lo || lo < lam) lo = lam, has_lo = true;
          }
        };
        Vec<S, 2> cs, ct;
        cs << S(1), S(0);
        ct << S(0), S(1);
        add_constraint(cs, S(1));
        add_constraint(Vec<S, 2>(-cs), S(0));
        add_constraint(ct, S(1));
        add_constraint(Vec<S, 2>(-ct), S(0));
        for (const auto& fb : facets) {
          Vec<S, 2> coef;
          coef << fb.normal.dot(ex), S(-fb.normal.dot(ey));
          add_constraint(coef, S(eps * fb.offset - fb.normal.dot(base)));
        }
        if (empty || !has_lo || !has_hi || hi < lo) continue;
        for (const S& lam : {lo, hi}) {
          const Vec<S, 2> st = p0 + lam * dir;
          consider(Vec<S, 2>(p + st(0) * ex), Vec<S, 2>(r + st(1) * ey));
        }
      }
    }
  }
  if (!found) throw std::logic_error("delta_at_exact_2d: no feasible boundary pair");
  return best;
}

}  // namespace detail

/// Modulus of convexity on a grid plus the characteristic of convexity.
/// 2D polytopal: exact. 3D polytopal: exact zeros up to the longest sphere
/// segment, sampled estimates beyond (flagged). Analytic: sampled estimates.
template <typename S, int D>
ConvexityProfile<S> convexity_profile(const Norm<S, D>& n, const std::vector<S>& eps_grid,
                                      const SampleSpec& spec = {}) {
  ConvexityProfile<S> out;
  for (const auto& e : eps_grid) {
    if (ScalarTraits<S>::sign(e) < 0 || ScalarTraits<S>::sign(S(e - S(2))) > 0)
      throw GeomError(GeomErrc::precondition, "convexity_profile: eps outside [0,2]");
  }
  out.epsilons = eps_grid;
  std::sort(out.epsilons.begin(), out.epsilons.end());

  if (n.is_polytopal()) {
    const S seg = detail::longest_sphere_segment(n);
    out.eps0 = seg;
    out.eps0_exact = ScalarTraits<S>::exact;
    for (const auto& e : out.epsilons) {
      if constexpr (D == 2) {
        if (ScalarTraits<S>::sign(e) == 0) {
          out.deltas.push_back(S(0));
        } else {
          out.deltas.push_back(detail::delta_at_exact_2d<S>(n, e));
        }
        out.delta_exact.push_back(ScalarTraits<S>::exact ? 1 : 0);
      } else {
        if (ScalarTraits<S>::leq(e, seg)) {
          out.deltas.push_back(S(0));  // witnessed by points on the sphere segment
          out.delta_exact.push_back(ScalarTraits<S>::exact ? 1 : 0);
        } else {
          // Sampled upper estimate over boundary direction pairs: evaluate
          // the gauge (as double) at roughly uniform sphere points.
          std::vector<Vec<double, D>> boundary;
          {
            const double golden = M_PI * (3.0 - std::sqrt(5.0));
            const int N = 400;
            for (int sidx = 0; sidx < N; ++sidx) {
              const double z = 1.0 - 2.0 * (sidx + 0.5) / N;
              const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
              Vec<double, D> d;
              d << rxy * std::cos(golden * sidx), rxy * std::sin(golden * sidx), z;
              double g = 0.0;
              for (const auto& f : n.ball().facets) {
                double dot = 0.0;
                for (int cc = 0; cc < D; ++cc) dot += ScalarTraits<S>::to_double(f.normal(cc)) * d(cc);
                g = std::max(g, dot / ScalarTraits<S>::to_double(f.offset));
              }
              boundary.push_back(Vec<double, D>(d / g));
            }
          }
          auto dgauge = [&](const Vec<double, D>& x) {
            double g = 0.0;
            for (const auto& f : n.ball().facets) {
              double dot = 0.0;
              for (int cc = 0; cc < D; ++cc) dot += ScalarTraits<S>::to_double(f.normal(cc)) * x(cc);
              g = std::max(g, dot / ScalarTraits<S>::to_double(f.offset));
            }
            return g;
          };
          const double epsd = ScalarTraits<S>::to_double(e);
          double bestd = 1.0;
          for (std::size_t i = 0; i < boundary.size(); ++i) {
            for (std::size_t j = i + 1; j < boundary.size(); ++j) {
              if (dgauge(Vec<double, D>(boundary[i] - boundary[j])) < epsd) continue;
              bestd = std::min(bestd, 1.0 - dgauge(Vec<double, D>((boundary[i] + boundary[j]) / 2.0)));
            }
          }
          out.deltas.push_back(S(std::max(0.0, bestd)));
          out.delta_exact.push_back(0);
        }
      }
    }
    // Monotone envelope: delta is nondecreasing, so fold minima backwards.
    for (int i = static_cast<int>(out.deltas.size()) - 2; i >= 0; --i) {
      if (out.deltas[i + 1] < out.deltas[i]) {
        out.deltas[i] = out.deltas[i + 1];
        out.delta_exact[i] = out.delta_exact[i + 1];
      }
    }
    return out;
  }

  if constexpr (!ScalarTraits<S>::exact) {
    // Analytic norms: equality-constrained boundary sampling estimate.
    for (const auto& e : out.epsilons) {
      if (e <= numeric_tolerance()) {
        out.deltas.push_back(S(0));
        out.delta_exact.push_back(0);
        continue;
      }
      double best = 1.0;
      if constexpr (D == 2) {
        const int N = spec.directions_2d;
        const double chord_angle = 2.0 * std::asin(std::min(1.0, ScalarTraits<S>::to_double(e) / 2.0));
        if (n.kind() == NormKind::l2) {
          for (int k = 0; k < N; ++k) {
            const double th = 2.0 * M_PI * k / N;
            Vec<double, 2> x, y;
            x << std::cos(th), std::sin(th);
            y << std::cos(th + chord_angle), std::sin(th + chord_angle);
            best = std::min(best, 1.0 - norm_eval(n, Vec<double, 2>((x + y) / 2.0)));
          }
        }
      } else {
        const auto fs = dual_unit_functionals(n, spec);
        std::vector<Vec<double, D>> boundary;
        for (const auto& f : fs) boundary.push_back(Vec<double, D>(f.a / norm_eval(n, f.a)));
        const double epsd = ScalarTraits<S>::to_double(e);
        for (std::size_t i = 0; i < boundary.size(); ++i) {
          for (std::size_t j = i + 1; j < boundary.size(); ++j) {
            if (norm_eval(n, Vec<double, D>(boundary[i] - boundary[j])) < epsd) continue;
            best = std::min(best, 1.0 - norm_eval(n, Vec<double, D>((boundary[i] + boundary[j]) / 2.0)));
          }
        }
      }
      out.deltas.push_back(S(std::max(0.0, best)));
      out.delta_exact.push_back(0);
    }
    for (int i = static_cast<int>(out.deltas.size()) - 2; i >= 0; --i) {
      if (out.deltas[i + 1] < out.deltas[i]) out.deltas[i] = out.deltas[i + 1];
    }
    // Grid rule for the characteristic of convexity.
    out.eps0 = S(0);
    for (std::size_t i = 0; i < out.epsilons.size(); ++i) {
      if (ScalarTraits<S>::to_double(out.deltas[i]) <= numeric_tolerance()) out.eps0 = out.epsilons[i];
    }
    out.eps0_exact = false;
    return out;
  }
  throw GeomError(GeomErrc::unsupported_norm, "convexity_profile: analytic norm on the exact lane");
}

}  // namespace widthlab
