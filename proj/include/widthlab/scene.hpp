#pragma once

// Scenes: serialized problem instances (norm + bodies + query + expected
// verdict) shared by the corpus tests and the CLI.

#include <string>

#include "widthlab/json_io.hpp"

namespace widthlab {

struct RunOptions {
  bool force_float = false;
  bool with_oracle = false;
  int grid_resolution = 201;
  unsigned seed = 12345;
};

/// Executes the scene's query and compares against its expected block.
/// Returns {name, op, mode, computed, expected, match}.
Json run_scene(const Json& scene, const RunOptions& opts = {});

/// Runs every *.json scene under dir (sorted by filename).
/// Returns {results: [...], total, mismatches, all_match}.
Json run_corpus(const std::string& dir, const RunOptions& opts = {});

Json load_json_file(const std::string& path);

/// Subset match of expected against computed. Rational strings compare
/// exactly; numbers within tol; comparator objects {"at_least"|"at_most"}
/// and {"near", "tol"} are supported. The "provenance" key is metadata.
bool expected_matches(const Json& expected, const Json& computed, double tol);

}  // namespace widthlab
