// widthlab: diametric-completeness invariants of convex bodies in 2D/3D
// Minkowski spaces. Queries run on scene files or inline norm/body specs and
// print one deterministic JSON object.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "widthlab/scene.hpp"
#include "widthlab/svg.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonArgs {
  std::string scene_path;
  std::string norm_json;
  std::string body_json;
  std::string body_name = "K";
  bool use_oracle = false;
  bool use_float = false;
  double tol = 1e-9;
  int grid = 201;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scene", args.scene_path, "scene JSON file");
  cmd->add_option("--norm", args.norm_json, "inline norm spec JSON");
  cmd->add_option("--body", args.body_json, "inline body spec JSON (points/segment/vertices)");
  cmd->add_option("--body-name", args.body_name, "body name inside the scene");
  cmd->add_flag("--oracle", args.use_oracle, "cross-check with the sampling oracle");
  cmd->add_flag("--float", args.use_float, "run on the double lane");
  cmd->add_option("--tol", args.tol, "tolerance for double-mode predicates");
  cmd->add_option("--grid", args.grid, "oracle grid resolution per axis");
}

widthlab::Json base_scene(const CommonArgs& args) {
  using widthlab::Json;
  Json scene;
  if (!args.scene_path.empty()) {
    scene = widthlab::load_json_file(args.scene_path);
    scene.erase("expected");
  } else {
    if (args.norm_json.empty())
      throw widthlab::GeomError(widthlab::GeomErrc::schema, "need --scene or --norm");
    scene["name"] = "inline";
    scene["norm"] = Json::parse(args.norm_json);
    if (!args.body_json.empty()) scene["bodies"][args.body_name] = Json::parse(args.body_json);
  }
  return scene;
}

int emit(const widthlab::Json& computed, std::optional<bool> verdict) {
  widthlab::Json out;
  out["version"] = kVersion;
  for (const auto& [k, v] : computed.items()) out[k] = v;
  std::cout << out.dump(2) << "\n";
  if (computed.contains("oracle") && !computed["oracle"].value("agrees", true)) return 1;
  if (verdict.has_value()) return *verdict ? 0 : 1;
  return 0;
}

int run_verb(const CommonArgs& args, const widthlab::Json& query,
             const char* verdict_key = nullptr, const char* verdict_value = nullptr) {
  widthlab::numeric_tolerance() = args.tol;
  widthlab::RunOptions opts;
  opts.force_float = args.use_float;
  opts.with_oracle = args.use_oracle;
  opts.grid_resolution = args.grid;
  widthlab::Json scene = base_scene(args);
  scene["query"] = query;
  const widthlab::Json report = widthlab::run_scene(scene, opts);
  const widthlab::Json& computed = report["computed"];
  std::optional<bool> verdict;
  if (verdict_key && computed.contains(verdict_key)) {
    const auto& v = computed[verdict_key];
    if (v.is_boolean()) {
      verdict = v.get<bool>();
    } else if (v.is_string() && verdict_value) {
      verdict = v.get<std::string>() == verdict_value;
    } else if (v.is_array()) {
      verdict = true;
      for (const auto& item : v) {
        if (!(item.is_boolean() && item.get<bool>())) verdict = false;
      }
    }
  }
  return emit(computed, verdict);
}

}  // namespace

int main(int argc, char** argv) {
  using widthlab::Json;
  CLI::App app{"widthlab: diameters, widths, spherical hulls and completeness of convex bodies"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string x_json, y_json, u_json, w_json, f_json, gammas_json = "[1,\"3/2\",2,3]";
  std::string eps_json = "[0,\"1/2\",1,\"3/2\",2]", centers_json, radius = "1", tie = "lex";
  std::string out_path, corpus_dir = "data/corpus";
  int m = 2, samples = 200;

  auto* diam = app.add_subcommand("diam", "diameter with witness pair");
  add_common(diam, args);

  auto* width_cmd = app.add_subcommand("width", "directional width (with --f) or full width report");
  add_common(width_cmd, args);
  width_cmd->add_option("--f", f_json, "dual-unit functional coefficients (JSON array)");

  auto* circ = app.add_subcommand("circumradius", "circumradius and an optimal center");
  add_common(circ, args);

  auto* eta = app.add_subcommand("eta", "wide spherical hull");
  add_common(eta, args);
  auto* tau = app.add_subcommand("tau", "tight spherical hull");
  add_common(tau, args);

  auto* complete = app.add_subcommand("complete", "greedy completion");
  add_common(complete, args);
  complete->add_option("--tie", tie, "tie rule: lex | reverse");

  auto* isc = app.add_subcommand("is-complete", "completeness test");
  add_common(isc, args);
  auto* iscw = app.add_subcommand("is-constant-width", "constant width test");
  add_common(iscw, args);
  auto* uniq = app.add_subcommand("unique-completion", "uniqueness of completion");
  add_common(uniq, args);

  auto* u1 = app.add_subcommand("check-u1", "does some segment have a unique completion");
  add_common(u1, args);

  auto* um = app.add_subcommand("check-um", "equilateral simplex completion properties");
  add_common(um, args);
  um->add_option("--m", m, "simplex dimension");

  auto* lemma = app.add_subcommand("ball-lemma", "two-ball intersection identity");
  add_common(lemma, args);
  lemma->add_option("--x", x_json, "first center");
  lemma->add_option("--y", y_json, "second center");
  lemma->add_option("--gammas", gammas_json, "radii (JSON array)");

  auto* conv = app.add_subcommand("convexity", "modulus of convexity profile");
  add_common(conv, args);
  conv->add_option("--eps", eps_json, "epsilon grid (JSON array)");

  auto* extend = app.add_subcommand("extend-simplex", "equidistant extension experiment");
  add_common(extend, args);
  extend->add_option("--samples", samples, "sampled solutions (analytic norms)");

  auto* section = app.add_subcommand("section", "planar section of the unit ball or a body");
  add_common(section, args);
  section->add_option("--u", u_json, "first span vector");
  section->add_option("--w", w_json, "second span vector");

  auto* corpus = app.add_subcommand("corpus", "run the scenario corpus");
  corpus->add_option("--dir", corpus_dir, "corpus directory");
  corpus->add_flag("--oracle", args.use_oracle, "cross-check scenes with the oracle");
  corpus->add_option("--tol", args.tol, "tolerance for double-mode predicates");

  auto* render = app.add_subcommand("render", "emit an SVG figure for a scene");
  add_common(render, args);
  render->add_option("--out", out_path, "output SVG path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (diam->parsed()) return run_verb(args, {{"op", "diam"}, {"body", args.body_name}});
    if (width_cmd->parsed()) {
      if (f_json.empty())
        return run_verb(args, {{"op", "width-report"}, {"body", args.body_name}});
      return run_verb(args, {{"op", "width"}, {"body", args.body_name}, {"f", Json::parse(f_json)}});
    }
    if (circ->parsed()) return run_verb(args, {{"op", "circumradius"}, {"body", args.body_name}});
    if (eta->parsed()) return run_verb(args, {{"op", "eta"}, {"body", args.body_name}});
    if (tau->parsed()) return run_verb(args, {{"op", "tau"}, {"body", args.body_name}});
    if (complete->parsed()) {
      return run_verb(args, {{"op", "complete"}, {"body", args.body_name}, {"tie", tie}}, "complete");
    }
    if (isc->parsed()) return run_verb(args, {{"op", "is-complete"}, {"body", args.body_name}}, "complete");
    if (iscw->parsed()) {
      return run_verb(args, {{"op", "is-constant-width"}, {"body", args.body_name}}, "constant_width");
    }
    if (uniq->parsed()) {
      return run_verb(args, {{"op", "unique-completion"}, {"body", args.body_name}}, "unique");
    }
    if (u1->parsed()) return run_verb(args, {{"op", "check-u1"}}, "verdict", "holds");
    if (um->parsed()) {
      return run_verb(args, {{"op", "check-um"}, {"body", args.body_name}, {"m", m}}, "um", "holds");
    }
    if (lemma->parsed()) {
      Json q = {{"op", "ball-lemma"}, {"gammas", Json::parse(gammas_json)}};
      if (!x_json.empty()) q["x"] = Json::parse(x_json);
      if (!y_json.empty()) q["y"] = Json::parse(y_json);
      return run_verb(args, q, "holds");
    }
    if (conv->parsed()) return run_verb(args, {{"op", "convexity"}, {"eps", Json::parse(eps_json)}});
    if (extend->parsed()) {
      return run_verb(args, {{"op", "extend-simplex"}, {"body", args.body_name}, {"samples", samples}});
    }
    if (section->parsed()) {
      Json q = {{"op", "plane-section"}, {"u", Json::parse(u_json)}, {"w", Json::parse(w_json)}};
      if (!args.body_json.empty() || !args.scene_path.empty()) q["body"] = args.body_name;
      if (args.norm_json.empty() || args.body_json.empty()) q.erase("body");
      return run_verb(args, q);
    }
    if (corpus->parsed()) {
      widthlab::numeric_tolerance() = args.tol;
      widthlab::RunOptions opts;
      opts.with_oracle = args.use_oracle;
      const Json result = widthlab::run_corpus(corpus_dir, opts);
      Json out;
      out["version"] = kVersion;
      for (const auto& [k, v] : result.items()) out[k] = v;
      std::cout << out.dump(2) << "\n";
      return result.value("all_match", false) ? 0 : 1;
    }
    if (render->parsed()) {
      widthlab::numeric_tolerance() = args.tol;
      const Json scene = widthlab::load_json_file(args.scene_path);
      const std::string svg = widthlab::render_scene_svg(scene);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(out_path);
        out << svg;
      }
      return 0;
    }
  } catch (const widthlab::GeomError& e) {
    widthlab::Json err = widthlab::error_to_json(e);
    err["version"] = kVersion;
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    widthlab::Json err;
    err["version"] = kVersion;
    err["error"] = "internal";
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  return 2;
}
