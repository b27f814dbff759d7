#pragma once

// Canonical JSON forms. Rationals serialize as "p/q" strings; the exact
// lane rejects non-integral JSON numbers on input (write "1/2", not 0.5).

#include <string>
#include <vector>

#include "json.hpp"

#include "widthlab/completeness.hpp"

namespace widthlab {

using Json = nlohmann::ordered_json;

template <typename S>
Json scalar_to_json(const S& v) {
  if constexpr (ScalarTraits<S>::exact) {
    return format_rational(v);
  } else {
    return v;
  }
}

template <typename S>
S scalar_from_json(const Json& j) {
  if (j.is_string()) return scalar_from_string<S>(j.get<std::string>());
  if (j.is_number_integer()) return S(ScalarTraits<S>::from_int(j.get<long>()));
  if (j.is_number_float()) {
    if constexpr (ScalarTraits<S>::exact) {
      throw GeomError(GeomErrc::schema, "exact mode requires integers or \"p/q\" strings, got a float");
    } else {
      return j.get<double>();
    }
  }
  throw GeomError(GeomErrc::schema, "expected a scalar, got " + std::string(j.type_name()));
}

template <typename S, int D>
Json vec_to_json(const Vec<S, D>& v) {
  Json out = Json::array();
  for (int i = 0; i < D; ++i) out.push_back(scalar_to_json<S>(v(i)));
  return out;
}

template <typename S, int D>
Vec<S, D> vec_from_json(const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != D)
    throw GeomError(GeomErrc::schema, "expected a coordinate array of length " + std::to_string(D));
  Vec<S, D> v;
  for (int i = 0; i < D; ++i) v(i) = scalar_from_json<S>(j[i]);
  return v;
}

template <typename S, int D>
Json polytope_to_json(const Polytope<S, D>& p) {
  Json out;
  out["dim"] = D;
  out["affine_dim"] = p.affine_dim;
  out["vertices"] = Json::array();
  for (const auto& v : p.vertices) out["vertices"].push_back(vec_to_json<S, D>(v));
  out["facets"] = Json::array();
  for (const auto& f : p.facets) {
    Json fj;
    fj["a"] = vec_to_json<S, D>(f.normal);
    fj["b"] = scalar_to_json<S>(f.offset);
    out["facets"].push_back(fj);
  }
  return out;
}

/// Rebuilds the polytope from its strongest representation: vertices when
/// present (hull re-canonicalizes), else a halfspace intersection.
template <typename S, int D>
Polytope<S, D> polytope_from_json(const Json& j) {
  if (j.contains("dim") && j["dim"].get<int>() != D)
    throw GeomError(GeomErrc::schema, "polytope dimension mismatch");
  if (j.contains("vertices") && !j["vertices"].empty()) {
    std::vector<Vec<S, D>> pts;
    for (const auto& vj : j["vertices"]) pts.push_back(vec_from_json<S, D>(vj));
    return convex_hull<S, D>(pts);
  }
  if (j.contains("facets") && !j["facets"].empty()) {
    std::vector<Halfspace<S, D>> hs;
    for (const auto& fj : j["facets"]) {
      hs.push_back({vec_from_json<S, D>(fj.at("a")), scalar_from_json<S>(fj.at("b"))});
    }
    return intersect_halfspaces<S, D>(hs);
  }
  throw GeomError(GeomErrc::schema, "polytope needs vertices or facets");
}

inline NormKind norm_kind_from_string(const std::string& s) {
  if (s == "polytopal") return NormKind::polytopal;
  if (s == "l1") return NormKind::l1;
  if (s == "l2") return NormKind::l2;
  if (s == "linf") return NormKind::linf;
  if (s == "bicone") return NormKind::bicone;
  throw GeomError(GeomErrc::schema, "unknown norm kind: " + s);
}

template <typename S, int D>
Json norm_to_json(const Norm<S, D>& n) {
  Json out;
  out["kind"] = norm_kind_name(n.kind());
  if (n.kind() == NormKind::polytopal) {
    out["ball"] = polytope_to_json<S, D>(n.ball());
  } else {
    out["dim"] = D;
  }
  return out;
}

template <typename S, int D>
Norm<S, D> norm_from_json(const Json& j) {
  const NormKind kind = norm_kind_from_string(j.at("kind").get<std::string>());
  switch (kind) {
    case NormKind::polytopal:
      return Norm<S, D>::polytopal(polytope_from_json<S, D>(j.at("ball")));
    case NormKind::l1:
      return Norm<S, D>::l1();
    case NormKind::linf:
      return Norm<S, D>::linf();
    case NormKind::l2:
      if constexpr (!ScalarTraits<S>::exact) return Norm<S, D>::l2();
      throw GeomError(GeomErrc::schema, "l2 norm requires float mode");
    case NormKind::bicone:
      if constexpr (!ScalarTraits<S>::exact && D == 3) return Norm<S, D>::bicone();
      throw GeomError(GeomErrc::schema, "bicone norm requires float mode and dimension 3");
  }
  throw GeomError(GeomErrc::schema, "unreachable norm kind");
}

/// Dimension of a norm spec without committing to a scalar lane.
inline int norm_dim_from_json(const Json& j) {
  if (j.contains("dim")) return j["dim"].get<int>();
  if (j.contains("ball")) return j["ball"].at("dim").get<int>();
  throw GeomError(GeomErrc::schema, "norm spec needs \"dim\" or a \"ball\"");
}

/// True when the norm spec can only run on the double lane.
inline bool norm_requires_float(const Json& j) {
  const NormKind kind = norm_kind_from_string(j.at("kind").get<std::string>());
  return kind == NormKind::l2 || kind == NormKind::bicone;
}

inline Json error_to_json(const GeomError& e) {
  Json out;
  out["error"] = geom_errc_name(e.code());
  out["message"] = e.what();
  return out;
}

}  // namespace widthlab
