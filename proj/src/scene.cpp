#include "widthlab/scene.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>

#include "widthlab/oracle.hpp"

namespace widthlab {

namespace {

std::optional<Rat> try_rational(const Json& j) {
  if (!j.is_string()) return std::nullopt;
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

double as_double(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (const auto r = try_rational(j)) return ScalarTraits<Rat>::to_double(*r);
  throw GeomError(GeomErrc::schema, "expected a numeric value in comparison");
}

bool value_match(const Json& expected, const Json& computed, double tol);

bool compare_ordered(const Json& bound, const Json& computed, bool at_least) {
  const auto rb = try_rational(bound);
  const auto rc = try_rational(computed);
  if (rb && rc) return at_least ? (*rc >= *rb) : (*rc <= *rb);
  const double b = as_double(bound), c = as_double(computed);
  return at_least ? (c >= b - 1e-15) : (c <= b + 1e-15);
}

bool object_match(const Json& expected, const Json& computed, double tol) {
  if (expected.contains("at_least")) return compare_ordered(expected["at_least"], computed, true);
  if (expected.contains("at_most")) return compare_ordered(expected["at_most"], computed, false);
  if (expected.contains("near")) {
    const double t = expected.value("tol", tol);
    return std::abs(as_double(expected["near"]) - as_double(computed)) <= t;
  }
  if (!computed.is_object()) return false;
  for (const auto& [key, val] : expected.items()) {
    if (key == "provenance") continue;
    if (!computed.contains(key)) return false;
    if (!value_match(val, computed[key], tol)) return false;
  }
  return true;
}

bool value_match(const Json& expected, const Json& computed, double tol) {
  if (expected.is_object()) return object_match(expected, computed, tol);
  if (expected.is_array()) {
    if (!computed.is_array() || expected.size() != computed.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!value_match(expected[i], computed[i], tol)) return false;
    }
    return true;
  }
  if (expected.is_boolean()) return computed.is_boolean() && expected == computed;
  if (expected.is_string() && computed.is_string()) {
    const auto re = try_rational(expected);
    const auto rc = try_rational(computed);
    if (re && rc) return *re == *rc;
    return expected == computed;
  }
  if (expected.is_string() || computed.is_string() || expected.is_number()) {
    return std::abs(as_double(expected) - as_double(computed)) <= tol;
  }
  return expected == computed;
}

template <typename S, int D>
std::map<std::string, Polytope<S, D>> parse_bodies(const Json& scene, const Norm<S, D>& n) {
  std::map<std::string, Polytope<S, D>> out;
  if (!scene.contains("bodies")) return out;
  for (const auto& [name, spec] : scene["bodies"].items()) {
    if (spec.contains("points") || spec.contains("segment")) {
      const Json& arr = spec.contains("points") ? spec["points"] : spec["segment"];
      std::vector<Vec<S, D>> pts;
      for (const auto& pj : arr) pts.push_back(vec_from_json<S, D>(pj));
      out.emplace(name, convex_hull<S, D>(pts));
    } else if (spec.contains("ball")) {
      const auto c = vec_from_json<S, D>(spec["ball"].at("center"));
      const auto r = scalar_from_json<S>(spec["ball"].at("radius"));
      const auto ball = make_ball(n, c, r);
      if (!ball.materialized)
        throw GeomError(GeomErrc::schema, "ball-shaped bodies need a polytopal norm");
      out.emplace(name, *ball.materialized);
    } else {
      out.emplace(name, polytope_from_json<S, D>(spec));
    }
  }
  return out;
}

template <typename S, int D>
const Polytope<S, D>& named_body(const std::map<std::string, Polytope<S, D>>& bodies, const Json& q,
                                 const char* fallback = "K") {
  const std::string name = q.value("body", fallback);
  const auto it = bodies.find(name);
  if (it == bodies.end()) throw GeomError(GeomErrc::schema, "unknown body: " + name);
  return it->second;
}

template <typename S, int D>
std::vector<Polytope<S, D>> random_triangles(const Json& spec) {
  const int count = spec.value("count", 20);
  const unsigned seed = spec.value("seed", 7u);
  const long den = spec.value("coord_den", 4);
  const long max_num = spec.value("coord_max", 2) * den;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coord(-max_num, max_num);
  std::vector<Polytope<S, D>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Vec<S, D>> pts;
    for (int i = 0; i < 3; ++i) {
      Vec<S, D> p;
      for (int j = 0; j < D; ++j) p(j) = S(ScalarTraits<S>::from_int(coord(rng))) / S(ScalarTraits<S>::from_int(den));
      pts.push_back(p);
    }
    const auto hull = convex_hull<S, D>(pts);
    if (hull.affine_dim == 2 && hull.vertices.size() == 3) out.push_back(hull);
  }
  return out;
}

template <typename S, int D>
Json diameter_json(const Norm<S, D>& n, const Polytope<S, D>& k) {
  const auto d = diameter(n, k);
  Json out;
  out["diam"] = scalar_to_json<S>(d.value);
  out["witness"] = Json::array({vec_to_json<S, D>(d.witness_a), vec_to_json<S, D>(d.witness_b)});
  out["trivial"] = d.trivial;
  return out;
}

template <typename S, int D>
Json oracle_crosscheck(const Norm<S, D>& n, const Polytope<S, D>& k, const RunOptions& opts) {
  Json out;
  const auto view = oracle::oracle_norm_view(n);
  std::vector<oracle::DVec<D>> body;
  for (const auto& v : k.vertices) {
    oracle::DVec<D> p;
    for (int i = 0; i < D; ++i) p(i) = ScalarTraits<S>::to_double(v(i));
    body.push_back(p);
  }
  oracle::GridSpec grid;
  grid.resolution = opts.grid_resolution;
  grid.seed = opts.seed;

  const double exact_diam = ScalarTraits<S>::to_double(diameter(n, k).value);
  const double oracle_diam = oracle::oracle_diameter<D>(view, body, grid);
  out["diam_exact"] = exact_diam;
  out["diam_oracle"] = oracle_diam;
  const bool diam_ok = std::abs(exact_diam - oracle_diam) <= 1e-7 * (1.0 + std::abs(exact_diam));

  bool eta_ok = true;
  int eta_checked = 0;
  const auto cw_exact = is_constant_width(n, k).holds;
  const bool cw_oracle = oracle::oracle_constant_width<D>(view, body, 512, 1e-7, opts.seed);
  out["constant_width_exact"] = cw_exact;
  out["constant_width_oracle"] = cw_oracle;

  if (!k.trivial()) {
    const auto eta = wide_spherical_hull(n, k);
    // Sample box around eta; skip points too close to the membership boundary.
    Eigen::Vector3d lo = Eigen::Vector3d::Zero(), hi = Eigen::Vector3d::Zero();
    for (const auto& v : eta.hull.vertices) {
      for (int i = 0; i < D; ++i) {
        lo(i) = std::min(lo(i), ScalarTraits<S>::to_double(v(i)));
        hi(i) = std::max(hi(i), ScalarTraits<S>::to_double(v(i)));
      }
    }
    oracle::GridSpec box = grid;
    for (int i = 0; i < D; ++i) {
      const double pad = 0.5 * (hi(i) - lo(i)) + 0.1;
      box.lo(i) = lo(i) - pad;
      box.hi(i) = hi(i) + pad;
    }
    const double spacing = (box.hi - box.lo).template head<D>().maxCoeff() / grid.resolution;
    const double diam_val = exact_diam;
    for (const auto& x : oracle::sample_box_points<D>(box, 1000)) {
      Vec<S, D> xr;
      for (int i = 0; i < D; ++i) xr(i) = S(ScalarTraits<S>::from_int(std::lround(x(i) * 4096))) / S(ScalarTraits<S>::from_int(4096));
      oracle::DVec<D> xd;
      for (int i = 0; i < D; ++i) xd(i) = ScalarTraits<S>::to_double(xr(i));
      const double margin = ScalarTraits<S>::to_double(farthest_distance(n, k, xr)) - diam_val;
      if (std::abs(margin) <= 2.0 * spacing) continue;  // boundary band
      const bool exact_in = contains(eta.hull, xr);
      const bool oracle_in = oracle::oracle_eta_membership<D>(view, body, xd);
      ++eta_checked;
      if (exact_in != oracle_in) eta_ok = false;
    }
  }
  out["eta_points_checked"] = eta_checked;
  out["agrees"] = diam_ok && eta_ok && (cw_exact == cw_oracle);
  return out;
}

template <typename S, int D>
Json run_query(const Json& scene, const Norm<S, D>& n, const RunOptions& opts) {
  const Json& q = scene.at("query");
  const std::string op = q.at("op").get<std::string>();
  auto bodies = parse_bodies<S, D>(scene, n);
  Json computed;

  if (op == "diam") {
    computed = diameter_json(n, named_body(bodies, q));
  } else if (op == "norm-eval") {
    computed["value"] = scalar_to_json<S>(norm_eval(n, vec_from_json<S, D>(q.at("x"))));
  } else if (op == "ball-vertex") {
    computed["is_vertex"] = is_unit_ball_vertex(n, vec_from_json<S, D>(q.at("u")));
  } else if (op == "dual-functionals") {
    const auto fs = dual_unit_functionals(n);
    computed["count"] = fs.size();
    if (n.is_polytopal()) {
      Json arr = Json::array();
      for (const auto& f : fs) arr.push_back(vec_to_json<S, D>(f.a));
      computed["functionals"] = arr;
    }
  } else if (op == "width") {
    const DualFunctional<S, D> f{vec_from_json<S, D>(q.at("f"))};
    computed["width"] = scalar_to_json<S>(width(n, named_body(bodies, q), f));
  } else if (op == "width-report") {
    const auto wr = width_report(n, named_body(bodies, q));
    computed["min_width"] = scalar_to_json<S>(wr.min_width);
    computed["max_width"] = scalar_to_json<S>(wr.max_width);
    computed["diam"] = scalar_to_json<S>(wr.diam);
    computed["functional_count"] = wr.widths.size();
    computed["min_functional"] = vec_to_json<S, D>(wr.min_functional.a);
  } else if (op == "circumradius") {
    const auto cr = circumradius(n, named_body(bodies, q));
    computed["radius"] = scalar_to_json<S>(cr.radius);
    computed["center"] = vec_to_json<S, D>(cr.center);
    computed["exact"] = cr.exact;
  } else if (op == "convexity") {
    std::vector<S> grid;
    for (const auto& e : q.at("eps")) grid.push_back(scalar_from_json<S>(e));
    const auto prof = convexity_profile(n, grid);
    Json eps = Json::array(), deltas = Json::array(), flags = Json::array();
    for (std::size_t i = 0; i < prof.epsilons.size(); ++i) {
      eps.push_back(scalar_to_json<S>(prof.epsilons[i]));
      deltas.push_back(scalar_to_json<S>(prof.deltas[i]));
      flags.push_back(static_cast<bool>(prof.delta_exact[i]));
    }
    computed["epsilons"] = eps;
    computed["deltas"] = deltas;
    computed["delta_exact"] = flags;
    computed["eps0"] = scalar_to_json<S>(prof.eps0);
    computed["eps0_exact"] = prof.eps0_exact;
  } else if (op == "hulls-report" || op == "eta" || op == "tau") {
    const auto& k = named_body(bodies, q);
    const auto eta = wide_spherical_hull(n, k);
    const auto tau = tight_spherical_hull(n, k);
    computed["diam"] = scalar_to_json<S>(diameter(n, k).value);
    computed["diam_eta"] = scalar_to_json<S>(diameter(n, eta.hull).value);
    computed["diam_tau"] = scalar_to_json<S>(diameter(n, tau.hull).value);
    computed["complete"] = equal(eta.hull, k);
    computed["unique"] = ScalarTraits<S>::eq(diameter(n, eta.hull).value, diameter(n, k).value);
    computed["eta_equals_tau"] = equal(eta.hull, tau.hull);
    computed["k_in_tau"] = contains_polytope(tau.hull, k);
    computed["tau_in_eta"] = contains_polytope(eta.hull, tau.hull);
    computed["eta_equals_unit_ball"] = equal(eta.hull, n.ball());
    computed["tau_equals_unit_ball"] = equal(tau.hull, n.ball());
    computed["eta_vertex_count"] = eta.hull.vertices.size();
    computed["tau_vertex_count"] = tau.hull.vertices.size();
    if (op == "eta" || q.value("emit_polytopes", false)) computed["eta"] = polytope_to_json<S, D>(eta.hull);
    if (op == "tau" || q.value("emit_polytopes", false)) computed["tau"] = polytope_to_json<S, D>(tau.hull);
  } else if (op == "is-complete") {
    computed["complete"] = is_complete(n, named_body(bodies, q));
  } else if (op == "is-constant-width") {
    const auto cw = is_constant_width(n, named_body(bodies, q));
    computed["constant_width"] = cw.holds;
    if (cw.witness) {
      computed["witness_f"] = vec_to_json<S, D>(cw.witness->a);
      computed["witness_width"] = scalar_to_json<S>(*cw.witness_width);
    }
  } else if (op == "completeness-report") {
    const auto rep = completeness_report(n, named_body(bodies, q));
    computed["complete"] = rep.complete;
    computed["constant_width"] = rep.constant_width;
    computed["ball"] = rep.ball;
    computed["unique"] = rep.unique;
    computed["diam"] = scalar_to_json<S>(rep.diam);
    computed["diam_eta"] = scalar_to_json<S>(rep.diam_eta);
    if (rep.cw_witness) {
      computed["cw_witness_f"] = vec_to_json<S, D>(rep.cw_witness->a);
      computed["cw_witness_width"] = scalar_to_json<S>(*rep.cw_witness_width);
    }
    if (rep.ball_center) computed["ball_center"] = vec_to_json<S, D>(*rep.ball_center);
    if (rep.ball_radius) computed["ball_radius"] = scalar_to_json<S>(*rep.ball_radius);
  } else if (op == "unique-completion") {
    const auto& k = named_body(bodies, q);
    const auto eta = wide_spherical_hull(n, k);
    computed["unique"] = ScalarTraits<S>::eq(diameter(n, eta.hull).value, diameter(n, k).value);
    computed["diam"] = scalar_to_json<S>(diameter(n, k).value);
    computed["diam_eta"] = scalar_to_json<S>(diameter(n, eta.hull).value);
  } else if (op == "complete") {
    const auto& k = named_body(bodies, q);
    const TieRule rule = q.value("tie", "lex") == std::string("reverse") ? TieRule::reverse_lexicographic
                                                                         : TieRule::lexicographic;
    const auto res = complete_greedily(n, k, rule);
    computed["complete"] = res.complete;
    computed["iterations"] = res.iterations;
    computed["vertex_count"] = res.body.vertices.size();
    computed["contains_input"] = contains_polytope(res.body, k);
    computed["diam_preserved"] = ScalarTraits<S>::eq(diameter(n, res.body).value, diameter(n, k).value);
    const auto other = complete_greedily(
        n, k, rule == TieRule::lexicographic ? TieRule::reverse_lexicographic : TieRule::lexicographic);
    computed["distinct_from_other_rule"] = !equal(res.body, other.body);
    if (q.value("emit_polytopes", false)) computed["completion"] = polytope_to_json<S, D>(res.body);
  } else if (op == "ball-lemma") {
    const auto x = vec_from_json<S, D>(q.at("x"));
    const auto y = vec_from_json<S, D>(q.at("y"));
    Json holds = Json::array();
    for (const auto& gj : q.at("gammas")) {
      holds.push_back(ball_intersection_identity(n, x, y, scalar_from_json<S>(gj)).holds);
    }
    computed["holds"] = holds;
  } else if (op == "check-u1") {
    const auto res = check_u1(n);
    computed["verdict"] = verdict_name(res.verdict);
    if (res.u) computed["u"] = vec_to_json<S, D>(*res.u);
    computed["sections_consistent"] = res.sections_consistent;
    S min_de = res.scan.empty() ? S(0) : res.scan.front().second;
    for (const auto& [u, de] : res.scan) {
      if (de < min_de) min_de = de;
    }
    computed["min_diam_eta"] = scalar_to_json<S>(min_de);
    computed["scan_size"] = res.scan.size();
  } else if (op == "check-um") {
    const auto& t = named_body(bodies, q, "T");
    const int m = q.value("m", 2);
    if constexpr (ScalarTraits<S>::exact) {
      const auto res = check_um(n, t, m);
      computed["side"] = scalar_to_json<S>(res.side);
      computed["um"] = verdict_name(res.um);
      computed["umb"] = verdict_name(res.umb);
      computed["diam_eta"] = scalar_to_json<S>(res.diam_eta);
      computed["eta_is_ball"] = res.eta_is_ball;
    } else {
      const auto res = check_um_sampled<D>(n, t, m, q.value("value_tol", 1e-6));
      computed["side"] = res.side;
      computed["um"] = verdict_name(res.um);
      computed["umb"] = verdict_name(res.umb);
      computed["diam_eta"] = res.diam_eta;
      computed["min_width_eta"] = res.min_width_eta;
      computed["max_width_eta"] = res.max_width_eta;
      computed["ball_spread"] = res.ball_spread;
    }
  } else if (op == "extend-simplex") {
    const auto& t = named_body(bodies, q, "T");
    if constexpr (ScalarTraits<S>::exact) {
      if constexpr (D == 3) {
        const auto res = experiment_extend_simplex(n, t);
        Json cands = Json::array();
        for (const auto& c : res.candidates) cands.push_back(vec_to_json<S, 3>(c));
        computed["candidates"] = cands;
        computed["candidate_count"] = res.candidates.size();
        computed["extension_exists"] = res.extension_exists;
        computed["flat_piece_count"] = res.flat_pieces.size();
      } else {
        throw GeomError(GeomErrc::schema, "extend-simplex requires dimension 3");
      }
    } else {
      if constexpr (D == 3) {
        const auto res = experiment_extend_simplex_sampled(n, t, q.value("samples", 200));
        double radial = 0, zdev = 0;
        for (const auto& s : res.pair_solutions) {
          radial = std::max(radial, std::abs(std::hypot(s(0), s(1)) - 1.0));
          zdev = std::max(zdev, std::abs(s(2)));
        }
        computed["pair_solution_count"] = res.pair_solutions.size();
        computed["circle_radial_dev"] = radial;
        computed["circle_z_dev"] = zdev;
        Json cands = Json::array();
        for (const auto& c : res.candidates) cands.push_back(Json::array({c(0), c(1), c(2)}));
        computed["candidates"] = cands;
        computed["candidate_count"] = res.candidates.size();
        computed["extension_exists"] = res.extension_exists;
      } else {
        throw GeomError(GeomErrc::schema, "extend-simplex requires dimension 3");
      }
    }
  } else if (op == "plane-section") {
    if constexpr (D == 3) {
      const auto u = vec_from_json<S, 3>(q.at("u"));
      const auto w = vec_from_json<S, 3>(q.at("w"));
      const auto& body = q.contains("body") ? named_body(bodies, q) : n.ball();
      const auto sec = plane_section<S>(body, u, w);
      computed["affine_dim"] = sec.affine_dim;
      computed["vertex_count"] = sec.vertices.size();
      computed["section"] = polytope_to_json<S, 2>(sec);
    } else {
      throw GeomError(GeomErrc::schema, "plane-section requires dimension 3");
    }
  } else if (op == "minkowski-diff") {
    const auto& k = named_body(bodies, q);
    const auto diff = minkowski_sum(k, scale_translate(k, S(-1), Vec<S, D>(Vec<S, D>::Zero())));
    computed["vertex_count"] = diff.vertices.size();
    computed["facet_count"] = diff.facets.size();
    const S diam = diameter(n, k).value;
    computed["equals_scaled_ball"] =
        equal(diff, scale_translate(n.ball(), diam, Vec<S, D>(Vec<S, D>::Zero())));
  } else if (op == "intersect-balls") {
    std::vector<Halfspace<S, D>> hs;
    const S r = scalar_from_json<S>(q.at("radius"));
    for (const auto& cj : q.at("centers")) append_ball_facets(n, vec_from_json<S, D>(cj), r, hs);
    const auto p = intersect_halfspaces<S, D>(hs);
    computed["vertex_count"] = p.vertices.size();
    computed["affine_dim"] = p.affine_dim;
    computed["equals_unit_ball"] = equal(p, n.ball());
    if (q.value("emit_polytopes", false)) computed["polytope"] = polytope_to_json<S, D>(p);
  } else if (op == "segment-hulls-analytic") {
    if constexpr (!ScalarTraits<S>::exact) {
      const auto& k = named_body(bodies, q);
      computed["diam_eta"] = eta_diameter_estimate<D>(n, k);
      Json eta_in = Json::array(), tau_in = Json::array();
      if (q.contains("eta_probe")) {
        for (const auto& pj : q["eta_probe"]) eta_in.push_back(eta_contains(n, k, vec_from_json<S, D>(pj)));
      }
      if (q.contains("tau_probe")) {
        for (const auto& pj : q["tau_probe"])
          tau_in.push_back(tau_contains_estimate<D>(n, k, vec_from_json<S, D>(pj)));
      }
      computed["eta_probe"] = eta_in;
      computed["tau_probe"] = tau_in;
    } else {
      throw GeomError(GeomErrc::schema, "segment-hulls-analytic runs on the float lane");
    }
  } else if (op == "properties-ade") {
    std::vector<Polytope<S, D>> instances;
    if (q.contains("random_triangles")) {
      if constexpr (D == 2) {
        instances = random_triangles<S, D>(q["random_triangles"]);
      } else {
        throw GeomError(GeomErrc::schema, "random_triangles generator is 2D");
      }
    }
    if (q.contains("bodies")) {
      for (const auto& namej : q["bodies"]) {
        instances.push_back(bodies.at(namej.get<std::string>()));
      }
    }
    if (instances.empty()) throw GeomError(GeomErrc::schema, "properties-ade needs instances");
    const auto rep = experiment_properties_ade(n, instances);
    computed["a"] = verdict_name(rep.a);
    computed["d"] = verdict_name(rep.d);
    computed["e"] = verdict_name(rep.e);
    computed["instance_count"] = instances.size();
    computed["e_nontrivial_instances"] = rep.e_nontrivial_instances;
  } else {
    throw GeomError(GeomErrc::schema, "unknown query op: " + op);
  }

  if (opts.with_oracle && n.is_polytopal() && ScalarTraits<S>::exact && scene.contains("bodies") &&
      q.contains("body")) {
    computed["oracle"] = oracle_crosscheck(n, named_body(bodies, q), opts);
  }
  return computed;
}

template <typename S, int D>
Json run_scene_typed(const Json& scene, const RunOptions& opts) {
  const auto n = norm_from_json<S, D>(scene.at("norm"));
  Json report;
  report["name"] = scene.value("name", "unnamed");
  report["op"] = scene.at("query").at("op");
  report["mode"] = ScalarTraits<S>::exact ? "exact" : "float";
  report["computed"] = run_query<S, D>(scene, n, opts);
  if (scene.contains("expected")) {
    report["expected"] = scene["expected"];
    const double tol = scene.value("tolerance", 1e-9);
    report["match"] = expected_matches(scene["expected"], report["computed"], tol);
  } else {
    report["match"] = true;
  }
  if (report["computed"].contains("oracle") && !report["computed"]["oracle"].value("agrees", true)) {
    report["match"] = false;
  }
  return report;
}

}  // namespace

bool expected_matches(const Json& expected, const Json& computed, double tol) {
  return object_match(expected, computed, tol);
}

Json run_scene(const Json& scene, const RunOptions& opts) {
  const int dim = norm_dim_from_json(scene.at("norm"));
  const bool use_float =
      opts.force_float || norm_requires_float(scene.at("norm")) || scene.value("mode", "exact") == "float";
  if (dim == 2) {
    return use_float ? run_scene_typed<double, 2>(scene, opts) : run_scene_typed<Rat, 2>(scene, opts);
  }
  if (dim == 3) {
    return use_float ? run_scene_typed<double, 3>(scene, opts) : run_scene_typed<Rat, 3>(scene, opts);
  }
  throw GeomError(GeomErrc::schema, "scene dimension must be 2 or 3");
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeomError(GeomErrc::schema, "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

Json run_corpus(const std::string& dir, const RunOptions& opts) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  Json out;
  out["results"] = Json::array();
  int mismatches = 0;
  for (const auto& f : files) {
    Json rep;
    try {
      rep = run_scene(load_json_file(f), opts);
    } catch (const GeomError& e) {
      rep = error_to_json(e);
      rep["name"] = fs::path(f).stem().string();
      rep["match"] = false;
    }
    if (!rep.value("match", false)) ++mismatches;
    out["results"].push_back(rep);
  }
  out["total"] = files.size();
  out["mismatches"] = mismatches;
  out["all_match"] = mismatches == 0;
  return out;
}

}  // namespace widthlab
