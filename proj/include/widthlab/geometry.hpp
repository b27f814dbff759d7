#pragma once

// Exact convex-polytope arithmetic in 2D and 3D on Eigen fixed-size vectors
// templated on scalar. Polytopes keep synchronized V- and H-representations;
// lower-dimensional values (segments, points, planar polygons in 3D) are
// first-class and carry their affine dimension.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "widthlab/lp.hpp"
#include "widthlab/scalar.hpp"

namespace widthlab {

template <typename S, int D>
using Vec = Eigen::Matrix<S, D, 1>;

enum class GeomErrc {
  empty_input,
  empty_intersection,
  unbounded_intersection,
  degenerate_input,
  precondition,
  iteration_limit,
  unsupported_norm,
  schema,
};

class GeomError : public std::runtime_error {
 public:
  GeomError(GeomErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  GeomErrc code() const { return code_; }

 private:
  GeomErrc code_;
};

inline const char* geom_errc_name(GeomErrc c) {
  switch (c) {
    case GeomErrc::empty_input: return "empty_input";
    case GeomErrc::empty_intersection: return "empty_intersection";
    case GeomErrc::unbounded_intersection: return "unbounded_intersection";
    case GeomErrc::degenerate_input: return "degenerate_input";
    case GeomErrc::precondition: return "precondition";
    case GeomErrc::iteration_limit: return "iteration_limit";
    case GeomErrc::unsupported_norm: return "unsupported_norm";
    case GeomErrc::schema: return "schema";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Vector helpers

template <typename S, int D>
bool lex_less(const Vec<S, D>& a, const Vec<S, D>& b) {
  for (int i = 0; i < D; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

template <typename S, int D>
bool vec_eq(const Vec<S, D>& a, const Vec<S, D>& b) {
  for (int i = 0; i < D; ++i)
    if (!ScalarTraits<S>::eq(a(i), b(i))) return false;
  return true;
}

template <typename S, int D>
bool is_zero_vec(const Vec<S, D>& a) {
  for (int i = 0; i < D; ++i)
    if (ScalarTraits<S>::sign(a(i)) != 0) return false;
  return true;
}

template <typename S, int D>
S linf_norm(const Vec<S, D>& a) {
  S m = abs_value(a(0));
  for (int i = 1; i < D; ++i) m = std::max(m, abs_value(a(i)), [](const S& x, const S& y) { return x < y; });
  return m;
}

template <typename S, int D>
void sort_dedupe_points(std::vector<Vec<S, D>>& pts) {
  std::sort(pts.begin(), pts.end(), &lex_less<S, D>);
  std::vector<Vec<S, D>> out;
  for (const auto& p : pts) {
    if (out.empty() || !vec_eq<S, D>(out.back(), p)) out.push_back(p);
  }
  pts.swap(out);
}

/// Rank of the span of `vs` by Gaussian elimination (exact under Rat).
template <typename S, int D>
int rank_of(std::vector<Vec<S, D>> vs) {
  int rank = 0;
  for (int col = 0; col < D && rank < static_cast<int>(vs.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(vs.size()); ++r) {
      if (ScalarTraits<S>::sign(vs[r](col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(vs[rank], vs[pivot]);
    for (int r = 0; r < static_cast<int>(vs.size()); ++r) {
      if (r == rank || ScalarTraits<S>::sign(vs[r](col)) == 0) continue;
      vs[r] = (vs[r] * vs[rank](col) - vs[rank] * vs[r](col)).eval();
    }
    ++rank;
  }
  return rank;
}

template <typename S>
S cross2(const Vec<S, 2>& a, const Vec<S, 2>& b) {
  return a(0) * b(1) - a(1) * b(0);
}

template <typename S>
int orient2d(const Vec<S, 2>& a, const Vec<S, 2>& b, const Vec<S, 2>& c) {
  return ScalarTraits<S>::sign(cross2<S>(Vec<S, 2>(b - a), Vec<S, 2>(c - a)));
}

// ---------------------------------------------------------------------------
// Halfspace

template <typename S, int D>
struct Halfspace {
  Vec<S, D> normal;  // nonzero
  S offset = S(0);   // {x : <normal,x> <= offset}

  S eval(const Vec<S, D>& x) const { return normal.dot(x) - offset; }
};

/// Canonical scaling: offset 1 when positive, else sup-norm-1 normal.
template <typename S, int D>
Halfspace<S, D> normalize_halfspace(Halfspace<S, D> h) {
  if (is_zero_vec<S, D>(h.normal)) throw GeomError(GeomErrc::precondition, "halfspace with zero normal");
  if (ScalarTraits<S>::sign(h.offset) > 0) {
    h.normal /= h.offset;
    h.offset = S(1);
  } else {
    const S s = linf_norm<S, D>(h.normal);
    h.normal /= s;
    h.offset = S(h.offset / s);
  }
  return h;
}

template <typename S, int D>
bool halfspace_less(const Halfspace<S, D>& a, const Halfspace<S, D>& b) {
  if (lex_less<S, D>(a.normal, b.normal)) return true;
  if (lex_less<S, D>(b.normal, a.normal)) return false;
  return a.offset < b.offset;
}

template <typename S, int D>
bool halfspace_eq(const Halfspace<S, D>& a, const Halfspace<S, D>& b) {
  return vec_eq<S, D>(a.normal, b.normal) && ScalarTraits<S>::eq(a.offset, b.offset);
}

// ---------------------------------------------------------------------------
// Polytope

template <typename S, int D>
struct Polytope {
  std::vector<Vec<S, D>> vertices;       // extreme points, lexicographic order
  std::vector<Halfspace<S, D>> facets;   // normalized, irredundant, sorted
  int affine_dim = -1;

  bool full_dimensional() const { return affine_dim == D; }
  bool trivial() const { return vertices.size() < 2; }
};

namespace detail {

template <typename S, int D>
void canonicalize(Polytope<S, D>& p) {
  std::sort(p.vertices.begin(), p.vertices.end(), &lex_less<S, D>);
  for (auto& f : p.facets) f = normalize_halfspace<S, D>(f);
  std::sort(p.facets.begin(), p.facets.end(), &halfspace_less<S, D>);
  p.facets.erase(std::unique(p.facets.begin(), p.facets.end(), &halfspace_eq<S, D>), p.facets.end());
}

// Equality-pair constraints pinning x to the hyperplane <n,x> = <n,anchor>.
template <typename S, int D>
void push_equality(std::vector<Halfspace<S, D>>& fs, const Vec<S, D>& n, const Vec<S, D>& anchor) {
  fs.push_back({n, n.dot(anchor)});
  fs.push_back({Vec<S, D>(-n), S(-n.dot(anchor))});
}

template <typename S, int D>
Polytope<S, D> make_point(const Vec<S, D>& p) {
  Polytope<S, D> out;
  out.vertices = {p};
  for (int i = 0; i < D; ++i) {
    Vec<S, D> e = Vec<S, D>::Zero();
    e(i) = S(1);
    push_equality<S, D>(out.facets, e, p);
  }
  out.affine_dim = 0;
  canonicalize(out);
  return out;
}

template <typename S, int D>
Polytope<S, D> make_segment(const Vec<S, D>& a, const Vec<S, D>& b) {
  Polytope<S, D> out;
  out.vertices = {a, b};
  const Vec<S, D> u = b - a;
  if constexpr (D == 2) {
    Vec<S, 2> n;
    n << -u(1), u(0);
    push_equality<S, 2>(out.facets, n, a);
  } else {
    Vec<S, 3> n1;
    if (ScalarTraits<S>::sign(u(0)) != 0 || ScalarTraits<S>::sign(u(1)) != 0) {
      n1 << -u(1), u(0), S(0);
    } else {
      n1 << S(1), S(0), S(0);
    }
    const Vec<S, 3> n2 = u.cross(n1);
    push_equality<S, 3>(out.facets, n1, a);
    push_equality<S, 3>(out.facets, n2, a);
  }
  out.facets.push_back({u, u.dot(b)});
  out.facets.push_back({Vec<S, D>(-u), S(-u.dot(a))});
  out.affine_dim = 1;
  canonicalize(out);
  return out;
}

/// CCW ring of extreme-point indices of a 2D point set (monotone chain).
/// Assumes `pts` sorted lexicographically and deduplicated; size >= 1.
template <typename S>
std::vector<int> chain_hull_indices(const std::vector<Vec<S, 2>>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n == 1) return {0};
  std::vector<int> ring;
  auto build = [&](auto begin, auto end) {
    const std::size_t base = ring.size();
    for (auto it = begin; it != end; ++it) {
      const int i = *it;
      while (ring.size() >= base + 2 &&
             orient2d<S>(pts[ring[ring.size() - 2]], pts[ring[ring.size() - 1]], pts[i]) <= 0) {
        ring.pop_back();
      }
      ring.push_back(i);
    }
    ring.pop_back();  // endpoint repeats as the start of the next chain
  };
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  build(order.begin(), order.end());
  build(order.rbegin(), order.rend());
  if (ring.empty()) ring = {0, n - 1};  // all collinear: chain degenerates
  if (ring.size() == 2 && ring[0] == ring[1]) ring.pop_back();
  return ring;
}

template <typename S>
Polytope<S, 2> hull2(std::vector<Vec<S, 2>> pts) {
  sort_dedupe_points<S, 2>(pts);
  if (pts.empty()) throw GeomError(GeomErrc::empty_input, "convex_hull of empty point set");
  if (pts.size() == 1) return make_point<S, 2>(pts[0]);
  std::vector<int> ring = chain_hull_indices<S>(pts);
  if (ring.size() == 2) return make_segment<S, 2>(pts[ring[0]], pts[ring[1]]);

  Polytope<S, 2> out;
  out.affine_dim = 2;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const Vec<S, 2>& p = pts[ring[k]];
    const Vec<S, 2>& q = pts[ring[(k + 1) % ring.size()]];
    out.vertices.push_back(p);
    const Vec<S, 2> d = q - p;
    Vec<S, 2> n;
    n << d(1), -d(0);  // outward for a CCW ring
    out.facets.push_back({n, n.dot(p)});
  }
  canonicalize(out);
  return out;
}

template <typename S>
Polytope<S, 3> hull3(std::vector<Vec<S, 3>> pts) {
  sort_dedupe_points<S, 3>(pts);
  if (pts.empty()) throw GeomError(GeomErrc::empty_input, "convex_hull of empty point set");
  const int n = static_cast<int>(pts.size());
  if (n == 1) return make_point<S, 3>(pts[0]);

  // Affine basis search.
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n && i1 < 0; ++i)
    if (!vec_eq<S, 3>(pts[i], pts[0])) i1 = i;
  const Vec<S, 3> u = pts[i1] - pts[0];
  for (int i = 1; i < n && i2 < 0; ++i)
    if (!is_zero_vec<S, 3>(Vec<S, 3>(u.cross(Vec<S, 3>(pts[i] - pts[0]))))) i2 = i;
  if (i2 < 0) {
    // Collinear: extremes along u.
    int lo = 0, hi = 0;
    for (int i = 1; i < n; ++i) {
      if (u.dot(pts[i]) < u.dot(pts[lo])) lo = i;
      if (u.dot(pts[hi]) < u.dot(pts[i])) hi = i;
    }
    return make_segment<S, 3>(pts[lo], pts[hi]);
  }
  const Vec<S, 3> v = pts[i2] - pts[0];
  const Vec<S, 3> plane_n = u.cross(v);
  for (int i = 1; i < n && i3 < 0; ++i)
    if (ScalarTraits<S>::sign(plane_n.dot(Vec<S, 3>(pts[i] - pts[0]))) != 0) i3 = i;

  if (i3 < 0) {
    // Planar: 2D hull in projected coordinates, lifted back. The chain hull
    // needs its input sorted in the projected coordinates, not the 3D order.
    std::vector<Vec<S, 2>> proj(n);
    for (int i = 0; i < n; ++i) {
      proj[i] << u.dot(Vec<S, 3>(pts[i] - pts[0])), v.dot(Vec<S, 3>(pts[i] - pts[0]));
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less<S, 2>(proj[a], proj[b]); });
    std::vector<Vec<S, 2>> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = proj[order[i]];
    std::vector<int> ring = chain_hull_indices<S>(sorted);
    if (ring.size() == 2) return make_segment<S, 3>(pts[order[ring[0]]], pts[order[ring[1]]]);

    Polytope<S, 3> out;
    out.affine_dim = 2;
    Vec<S, 3> centroid = Vec<S, 3>::Zero();
    for (std::size_t k = 0; k < ring.size(); ++k) {
      out.vertices.push_back(pts[order[ring[k]]]);
      centroid += out.vertices.back();
    }
    centroid /= S(static_cast<long>(ring.size()));
    push_equality<S, 3>(out.facets, plane_n, pts[0]);
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const Vec<S, 3>& p = pts[order[ring[k]]];
      const Vec<S, 3>& q = pts[order[ring[(k + 1) % ring.size()]]];
      Vec<S, 3> h = plane_n.cross(Vec<S, 3>(q - p));
      if (ScalarTraits<S>::sign(S(h.dot(centroid) - h.dot(p))) > 0) h = -h;
      out.facets.push_back({h, h.dot(p)});
    }
    canonicalize(out);
    return out;
  }

  // Full-dimensional: incremental hull over triangles, merged by plane.
  struct TriFace {
    std::array<int, 3> v;
    Vec<S, 3> n;
    S off;
    bool alive;
  };
  const Vec<S, 3> inner = (pts[0] + pts[i1] + pts[i2] + pts[i3]) / S(4);
  std::vector<TriFace> faces;
  auto add_face = [&](int a, int b, int c) {
    Vec<S, 3> nn = (pts[b] - pts[a]).cross(Vec<S, 3>(pts[c] - pts[a]));
    S off = nn.dot(pts[a]);
    if (ScalarTraits<S>::sign(S(nn.dot(inner) - off)) > 0) {
      nn = -nn;
      off = -off;
    }
    faces.push_back({{a, b, c}, nn, off, true});
  };
  add_face(0, i1, i2);
  add_face(0, i1, i3);
  add_face(0, i2, i3);
  add_face(i1, i2, i3);

  for (int idx = 0; idx < n; ++idx) {
    if (idx == 0 || idx == i1 || idx == i2 || idx == i3) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (faces[f].alive && ScalarTraits<S>::sign(S(faces[f].n.dot(pts[idx]) - faces[f].off)) > 0) {
        visible.push_back(f);
      }
    }
    if (visible.empty()) continue;
    std::map<std::pair<int, int>, int> edge_count;
    for (int f : visible) {
      const auto& t = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        const int a = t[e], b = t[(e + 1) % 3];
        ++edge_count[{std::min(a, b), std::max(a, b)}];
      }
    }
    for (int f : visible) faces[f].alive = false;
    for (const auto& [edge, count] : edge_count) {
      if (count == 1) add_face(edge.first, edge.second, idx);
    }
  }

  Polytope<S, 3> out;
  out.affine_dim = 3;
  std::vector<char> used(n, 0);
  for (const auto& f : faces) {
    if (!f.alive) continue;
    out.facets.push_back(normalize_halfspace<S, 3>({f.n, f.off}));
    for (int k : f.v) used[k] = 1;
  }
  std::sort(out.facets.begin(), out.facets.end(), &halfspace_less<S, 3>);
  out.facets.erase(std::unique(out.facets.begin(), out.facets.end(), &halfspace_eq<S, 3>), out.facets.end());
  // Keep only true vertices: active facet normals must span 3D.
  for (int i = 0; i < n; ++i) {
    if (!used[i]) continue;
    std::vector<Vec<S, 3>> active;
    for (const auto& h : out.facets) {
      if (ScalarTraits<S>::sign(h.eval(pts[i])) == 0) active.push_back(h.normal);
    }
    if (rank_of<S, 3>(active) == 3) out.vertices.push_back(pts[i]);
  }
  canonicalize(out);
  return out;
}

}  // namespace detail

/// Hull with irredundant V- and H-representations; lower-dimensional inputs
/// yield flagged degenerate polytopes.
template <typename S, int D>
Polytope<S, D> convex_hull(const std::vector<Vec<S, D>>& points) {
  if constexpr (D == 2) {
    return detail::hull2<S>(points);
  } else {
    return detail::hull3<S>(points);
  }
}

template <typename S, int D>
bool contains(const Polytope<S, D>& p, const Vec<S, D>& x) {
  for (const auto& h : p.facets) {
    if (ScalarTraits<S>::sign(h.eval(x)) > 0) return false;
  }
  return true;
}

template <typename S, int D>
bool contains_polytope(const Polytope<S, D>& p, const Polytope<S, D>& q) {
  for (const auto& v : q.vertices) {
    if (!contains(p, v)) return false;
  }
  return true;
}

template <typename S, int D>
bool equal(const Polytope<S, D>& p, const Polytope<S, D>& q) {
  return contains_polytope(p, q) && contains_polytope(q, p);
}

/// Bounded intersection of halfspaces. Throws GeomError with
/// empty_intersection / unbounded_intersection codes.
template <typename S, int D>
Polytope<S, D> intersect_halfspaces(const std::vector<Halfspace<S, D>>& halfspaces) {
  if (halfspaces.empty()) throw GeomError(GeomErrc::unbounded_intersection, "no constraints");
  // Per direction only the tightest offset binds (sup-norm-scaled key).
  std::vector<Halfspace<S, D>> reduced;
  {
    std::vector<Halfspace<S, D>> scaled;
    scaled.reserve(halfspaces.size());
    for (const auto& h : halfspaces) {
      if (is_zero_vec<S, D>(h.normal)) throw GeomError(GeomErrc::precondition, "halfspace with zero normal");
      const S s = linf_norm<S, D>(h.normal);
      scaled.push_back({Vec<S, D>(h.normal / s), S(h.offset / s)});
    }
    std::sort(scaled.begin(), scaled.end(), &halfspace_less<S, D>);
    for (const auto& h : scaled) {
      if (!reduced.empty() && vec_eq<S, D>(reduced.back().normal, h.normal)) continue;  // keep min offset
      reduced.push_back(h);
    }
  }

  const int m = static_cast<int>(reduced.size());
  DynMatrix<S> A(m, D);
  DynVector<S> b(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < D; ++j) A(i, j) = reduced[i].normal(j);
    b(i) = reduced[i].offset;
  }
  for (int j = 0; j < D; ++j) {
    for (int sgn : {1, -1}) {
      DynVector<S> c = DynVector<S>::Zero(D);
      c(j) = S(sgn);
      const auto sol = lp_maximize<S>(A, b, c);
      if (sol.status == LpStatus::infeasible)
        throw GeomError(GeomErrc::empty_intersection, "empty halfspace intersection");
      if (sol.status == LpStatus::unbounded)
        throw GeomError(GeomErrc::unbounded_intersection, "unbounded halfspace intersection");
    }
  }

  // Vertex enumeration: feasible intersections of D independent constraints.
  std::vector<Vec<S, D>> candidates;
  Eigen::Matrix<S, D, D> M;
  Vec<S, D> rhs;
  auto try_subset = [&](const std::array<int, D>& idx) {
    for (int r = 0; r < D; ++r) {
      for (int cidx = 0; cidx < D; ++cidx) M(r, cidx) = reduced[idx[r]].normal(cidx);
      rhs(r) = reduced[idx[r]].offset;
    }
    const S det = M.determinant();
    if (ScalarTraits<S>::sign(det) == 0) return;
    Vec<S, D> x;
    for (int cidx = 0; cidx < D; ++cidx) {
      Eigen::Matrix<S, D, D> Mc = M;
      Mc.col(cidx) = rhs;
      x(cidx) = S(Mc.determinant() / det);
    }
    for (const auto& h : reduced) {
      if (ScalarTraits<S>::sign(h.eval(x)) > 0) return;
    }
    candidates.push_back(x);
  };
  if constexpr (D == 2) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) try_subset({i, j});
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k) try_subset({i, j, k});
  }
  if (candidates.empty())
    throw GeomError(GeomErrc::empty_intersection, "halfspace intersection has no extreme point");
  return convex_hull<S, D>(candidates);
}

template <typename S, int D>
Polytope<S, D> minkowski_sum(const Polytope<S, D>& p, const Polytope<S, D>& q) {
  std::vector<Vec<S, D>> sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) sums.push_back(a + b);
  return convex_hull<S, D>(sums);
}

/// Exact image lambda*P + t; lambda may be negative or zero.
template <typename S, int D>
Polytope<S, D> scale_translate(const Polytope<S, D>& p, const S& lambda, const Vec<S, D>& t) {
  std::vector<Vec<S, D>> pts;
  pts.reserve(p.vertices.size());
  for (const auto& v : p.vertices) pts.push_back(Vec<S, D>(v * lambda + t));
  return convex_hull<S, D>(pts);
}

/// P intersected with span{u,w}, expressed in (u,w) coordinates.
template <typename S>
Polytope<S, 2> plane_section(const Polytope<S, 3>& p, const Vec<S, 3>& u, const Vec<S, 3>& w) {
  if (is_zero_vec<S, 3>(Vec<S, 3>(u.cross(w))))
    throw GeomError(GeomErrc::degenerate_input, "section plane spanned by dependent vectors");
  std::vector<Halfspace<S, 2>> hs;
  for (const auto& f : p.facets) {
    Vec<S, 2> n;
    n << f.normal.dot(u), f.normal.dot(w);
    if (is_zero_vec<S, 2>(n)) {
      if (ScalarTraits<S>::sign(f.offset) < 0)
        throw GeomError(GeomErrc::empty_intersection, "plane misses the polytope");
      continue;
    }
    hs.push_back({n, f.offset});
  }
  return intersect_halfspaces<S, 2>(hs);
}

/// CCW vertex ring of a full-dimensional 2D polytope (exact angular sort
/// around the vertex centroid).
template <typename S>
std::vector<Vec<S, 2>> ccw_ring(const Polytope<S, 2>& p) {
  if (p.affine_dim < 2) return p.vertices;
  Vec<S, 2> c = Vec<S, 2>::Zero();
  for (const auto& v : p.vertices) c += v;
  c /= S(static_cast<long>(p.vertices.size()));
  std::vector<Vec<S, 2>> ring = p.vertices;
  auto half = [&](const Vec<S, 2>& d) {
    const int sy = ScalarTraits<S>::sign(d(1));
    return (sy < 0 || (sy == 0 && ScalarTraits<S>::sign(d(0)) < 0)) ? 1 : 0;
  };
  std::sort(ring.begin(), ring.end(), [&](const Vec<S, 2>& a, const Vec<S, 2>& b) {
    const Vec<S, 2> da = a - c, db = b - c;
    const int ha = half(da), hb = half(db);
    if (ha != hb) return ha < hb;
    return ScalarTraits<S>::sign(cross2<S>(da, db)) > 0;
  });
  return ring;
}

}  // namespace widthlab
