#include "widthlab/svg.hpp"

#include <cstdio>
#include <map>
#include <vector>

namespace widthlab {

namespace {

struct Layer {
  std::string label;
  std::string fill;
  std::string stroke;
  std::vector<std::pair<double, double>> ring;  // empty: skipped
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string polygon_element(const Layer& layer) {
  if (layer.ring.empty()) return {};
  std::string pts;
  for (const auto& [x, y] : layer.ring) {
    if (!pts.empty()) pts += " ";
    pts += fmt(x) + "," + fmt(-y);  // SVG y axis points down
  }
  if (layer.ring.size() <= 2) {
    const auto& a = layer.ring.front();
    const auto& b = layer.ring.back();
    return "  <line x1=\"" + fmt(a.first) + "\" y1=\"" + fmt(-a.second) + "\" x2=\"" + fmt(b.first) +
           "\" y2=\"" + fmt(-b.second) + "\" stroke=\"" + layer.stroke +
           "\" stroke-width=\"0.02\"><title>" + layer.label + "</title></line>\n";
  }
  return "  <polygon points=\"" + pts + "\" fill=\"" + layer.fill + "\" stroke=\"" + layer.stroke +
         "\" stroke-width=\"0.02\" fill-opacity=\"0.35\"><title>" + layer.label + "</title></polygon>\n";
}

std::vector<std::pair<double, double>> ring_to_screen(const std::vector<Vec<Rat, 2>>& ring) {
  std::vector<std::pair<double, double>> out;
  for (const auto& v : ring) {
    out.emplace_back(ScalarTraits<Rat>::to_double(v(0)), ScalarTraits<Rat>::to_double(v(1)));
  }
  return out;
}

std::string compose_svg(const std::string& title, const std::vector<Layer>& layers) {
  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  bool first = true;
  for (const auto& l : layers) {
    for (const auto& [x, y] : l.ring) {
      if (first) {
        lo_x = hi_x = x;
        lo_y = hi_y = -y;
        first = false;
      }
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, -y);
      hi_y = std::max(hi_y, -y);
    }
  }
  const double pad = 0.2 * std::max(hi_x - lo_x, hi_y - lo_y) + 0.1;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  out += fmt(lo_x - pad) + " " + fmt(lo_y - pad) + " " + fmt(hi_x - lo_x + 2 * pad) + " " +
         fmt(hi_y - lo_y + 2 * pad) + "\">\n";
  out += "  <title>" + title + "</title>\n";
  for (const auto& l : layers) out += polygon_element(l);
  out += "</svg>\n";
  return out;
}

Layer make_layer(const std::string& label, const std::string& fill, const std::string& stroke,
                 const Polytope<Rat, 2>& p) {
  return {label, fill, stroke, ring_to_screen(ccw_ring<Rat>(p))};
}

std::optional<Polytope<Rat, 2>> try_section(const Polytope<Rat, 3>& p, const Vec<Rat, 3>& u,
                                            const Vec<Rat, 3>& w) {
  try {
    return plane_section<Rat>(p, u, w);
  } catch (const GeomError&) {
    return std::nullopt;
  }
}

}  // namespace

std::string render_scene_svg(const Json& scene, const RunOptions& opts) {
  (void)opts;
  if (norm_requires_float(scene.at("norm")))
    throw GeomError(GeomErrc::unsupported_norm, "render: analytic norms have no polytopal figure");
  const int dim = norm_dim_from_json(scene.at("norm"));
  const std::string name = scene.value("name", "scene");
  const Json& q = scene.at("query");
  const std::string body_name = q.value("body", "K");

  if (dim == 2) {
    const auto n = norm_from_json<Rat, 2>(scene.at("norm"));
    Json spec = scene.at("bodies").at(body_name);
    std::vector<Vec<Rat, 2>> pts;
    const Json& arr = spec.contains("points") ? spec["points"]
                      : spec.contains("segment") ? spec["segment"]
                                                 : spec.at("vertices");
    for (const auto& pj : arr) pts.push_back(vec_from_json<Rat, 2>(pj));
    const auto k = convex_hull<Rat, 2>(pts);
    std::vector<Layer> layers;
    layers.push_back(make_layer("unit ball", "none", "#999999", n.ball()));
    if (!k.trivial()) {
      const auto eta = wide_spherical_hull(n, k);
      const auto tau = tight_spherical_hull(n, k);
      layers.push_back(make_layer("eta(K)", "#cfe8ff", "#3377cc", eta.hull));
      layers.push_back(make_layer("tau(K)", "#ffe2b8", "#cc8833", tau.hull));
    }
    layers.push_back(make_layer("K", "#c8e6c9", "#2e7d32", k));
    return compose_svg(name, layers);
  }

  if (dim != 3) throw GeomError(GeomErrc::schema, "render: dimension must be 2 or 3");
  const auto n = norm_from_json<Rat, 3>(scene.at("norm"));
  Json spec = scene.at("bodies").at(body_name);
  std::vector<Vec<Rat, 3>> pts;
  const Json& arr = spec.contains("points") ? spec["points"]
                    : spec.contains("segment") ? spec["segment"]
                                               : spec.at("vertices");
  for (const auto& pj : arr) pts.push_back(vec_from_json<Rat, 3>(pj));
  const auto k = convex_hull<Rat, 3>(pts);
  std::optional<Polytope<Rat, 3>> eta, tau;
  if (!k.trivial()) {
    eta = wide_spherical_hull(n, k).hull;
    tau = tight_spherical_hull(n, k).hull;
  }

  // Sections: the three coordinate planes plus an optional named plane.
  std::vector<std::pair<std::string, std::pair<Vec<Rat, 3>, Vec<Rat, 3>>>> planes;
  auto axis = [](int i) {
    Vec<Rat, 3> e = Vec<Rat, 3>::Zero();
    e(i) = Rat(1);
    return e;
  };
  planes.push_back({"xy", {axis(0), axis(1)}});
  planes.push_back({"xz", {axis(0), axis(2)}});
  planes.push_back({"yz", {axis(1), axis(2)}});
  if (q.contains("section")) {
    planes.push_back({"named", {vec_from_json<Rat, 3>(q["section"].at("u")),
                                vec_from_json<Rat, 3>(q["section"].at("w"))}});
  }

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
                    fmt(8.0 * planes.size()) + " 8\">\n  <title>" + name + " (sections)</title>\n";
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const auto& [label, uw] = planes[i];
    std::vector<Layer> layers;
    if (const auto s = try_section(n.ball(), uw.first, uw.second)) {
      layers.push_back(make_layer("unit ball " + label, "none", "#999999", *s));
    }
    if (eta) {
      if (const auto s = try_section(*eta, uw.first, uw.second)) {
        layers.push_back(make_layer("eta " + label, "#cfe8ff", "#3377cc", *s));
      }
    }
    if (tau) {
      if (const auto s = try_section(*tau, uw.first, uw.second)) {
        layers.push_back(make_layer("tau " + label, "#ffe2b8", "#cc8833", *s));
      }
    }
    if (const auto s = try_section(k, uw.first, uw.second)) {
      layers.push_back(make_layer("K " + label, "#c8e6c9", "#2e7d32", *s));
    }
    // Nest each section as an inner svg cell.
    std::string cell = compose_svg(name + " " + label, layers);
    out += "  <svg x=\"" + fmt(8.0 * i) + "\" y=\"0\" width=\"8\" height=\"8\"" +
           cell.substr(std::string("<svg").size());
  }
  out += "</svg>\n";
  return out;
}

}  // namespace widthlab
