#pragma once

// SVG 1.1 figures for scenes: 2D scenes draw the body with its spherical
// hulls layered; 3D scenes draw the three coordinate-plane sections (plus a
// named section when the query provides one). Output is byte-stable.

#include <string>

#include "widthlab/scene.hpp"

namespace widthlab {

std::string render_scene_svg(const Json& scene, const RunOptions& opts = {});

}  // namespace widthlab
