#include "doctest.h"

#include "widthlab/scene.hpp"
#include "widthlab/svg.hpp"

using namespace widthlab;

namespace {

const std::string kCorpusDir = std::string(WIDTHLAB_SOURCE_DIR) + "/data/corpus";

}  // namespace

TEST_SUITE_BEGIN("scenes");

TEST_CASE("expected matching semantics") {
  Json computed = {{"diam", "4/1"}, {"flag", true}, {"value", 0.5}, {"vec", {"1/2", "0/1"}}};
  CHECK(expected_matches({{"diam", "4/1"}}, computed, 1e-9));
  CHECK(expected_matches({{"diam", "8/2"}}, computed, 1e-9));  // rationals compare exactly
  CHECK_FALSE(expected_matches({{"diam", "3/1"}}, computed, 1e-9));
  CHECK(expected_matches({{"flag", true}}, computed, 1e-9));
  CHECK_FALSE(expected_matches({{"flag", false}}, computed, 1e-9));
  CHECK(expected_matches({{"value", {{"near", 0.5000001}, {"tol", 1e-5}}}}, computed, 1e-9));
  CHECK(expected_matches({{"diam", {{"at_least", "7/2"}}}}, computed, 1e-9));
  CHECK_FALSE(expected_matches({{"diam", {{"at_most", "7/2"}}}}, computed, 1e-9));
  CHECK(expected_matches({{"vec", {"1/2", "0/1"}}}, computed, 1e-9));
  CHECK(expected_matches({{"provenance", "ignored"}, {"flag", true}}, computed, 1e-9));
}

TEST_CASE("inline scene runs on the right lane") {
  Json scene = {
      {"name", "inline-diam"},
      {"norm", {{"kind", "l1"}, {"dim", 2}}},
      {"bodies", {{"K", {{"segment", {{-1, 0}, {1, 0}}}}}}},
      {"query", {{"op", "diam"}, {"body", "K"}}},
      {"expected", {{"diam", "2/1"}}},
  };
  const auto report = run_scene(scene);
  CHECK(report["mode"] == "exact");
  CHECK(report["match"] == true);
  CHECK(report["computed"]["diam"] == "2/1");

  scene["norm"] = {{"kind", "l2"}, {"dim", 2}};
  scene["expected"] = {{"diam", 2.0}};
  const auto report2 = run_scene(scene);
  CHECK(report2["mode"] == "float");
  CHECK(report2["match"] == true);
}

TEST_CASE("schema errors are typed") {
  Json scene = {{"name", "bad"}, {"norm", {{"kind", "bicone"}, {"dim", 2}}},
                {"query", {{"op", "diam"}}}};
  CHECK_THROWS_AS(static_cast<void>(run_scene(scene)), GeomError);
  Json scene2 = {{"name", "bad2"}, {"norm", {{"kind", "l1"}, {"dim", 4}}},
                 {"query", {{"op", "diam"}}}};
  CHECK_THROWS_AS(static_cast<void>(run_scene(scene2)), GeomError);
  // Non-integral float in exact mode is rejected.
  Json scene3 = {{"name", "bad3"},
                 {"norm", {{"kind", "l1"}, {"dim", 2}}},
                 {"bodies", {{"K", {{"points", {{0.5, 0}, {1, 1}}}}}}},
                 {"query", {{"op", "diam"}}}};
  CHECK_THROWS_AS(static_cast<void>(run_scene(scene3)), GeomError);
}

TEST_CASE("the corpus matches end to end") {
  const auto result = run_corpus(kCorpusDir, {});
  CAPTURE(result.dump(2));
  CHECK(result["total"].get<int>() >= 30);
  for (const auto& rep : result["results"]) {
    CAPTURE(rep.dump(2));
    CHECK(rep.value("match", false));
  }
  CHECK(result["all_match"] == true);
}

TEST_CASE("scene output is deterministic") {
  const auto scene = load_json_file(kCorpusDir + "/l1_tetrahedron.json");
  const auto a = run_scene(scene).dump(2);
  const auto b = run_scene(scene).dump(2);
  CHECK(a == b);
}

TEST_CASE("canonical JSON round trip") {
  // One property-style pass over assorted polytopes: serialize, parse,
  // compare as sets and as bytes.
  using V3 = Vec<Rat, 3>;
  const std::vector<Polytope<Rat, 3>> samples = {
      convex_hull<Rat, 3>({V3(Rat(-1), Rat(-1), Rat(-1)), V3(Rat(1), Rat(1), Rat(-1)),
                           V3(Rat(1), Rat(-1), Rat(1)), V3(Rat(-1), Rat(1), Rat(1))}),
      convex_hull<Rat, 3>({V3(Rat(-1), Rat(0), Rat(0)), V3(Rat(1), Rat(0), Rat(0))}),
      convex_hull<Rat, 3>({V3(Rat(1, 3), Rat(-2, 7), Rat(5))}),
  };
  for (const auto& p : samples) {
    const Json j = polytope_to_json<Rat, 3>(p);
    const auto q = polytope_from_json<Rat, 3>(j);
    CHECK(equal(p, q));
    CHECK(j.dump() == polytope_to_json<Rat, 3>(q).dump());
  }
  const auto n = Norm<Rat, 2>::l1();
  const auto n2 = norm_from_json<Rat, 2>(norm_to_json<Rat, 2>(n));
  CHECK(equal(n.ball(), n2.ball()));
  // Facets-only input reconstructs the same body.
  Json facets_only;
  facets_only["dim"] = 2;
  facets_only["facets"] = polytope_to_json<Rat, 2>(n.ball())["facets"];
  CHECK(equal(polytope_from_json<Rat, 2>(facets_only), n.ball()));
}

TEST_CASE("svg rendering") {
  const auto scene2d = load_json_file(kCorpusDir + "/l1_2d_segment_unique.json");
  const auto svg = render_scene_svg(scene2d);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("eta(K)") != std::string::npos);
  CHECK(svg.find("tau(K)") != std::string::npos);
  CHECK(svg == render_scene_svg(scene2d));  // byte-stable

  const auto scene3d = load_json_file(kCorpusDir + "/l1_tetrahedron.json");
  const auto svg3 = render_scene_svg(scene3d);
  CHECK(svg3.find("sections") != std::string::npos);
  CHECK(svg3.find("xy") != std::string::npos);
}

TEST_SUITE_END();
