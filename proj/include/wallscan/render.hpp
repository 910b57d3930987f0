#pragma once

#include <string>
#include <vector>

#include "wallscan/walls.hpp"

namespace wallscan {

// Deterministic SVG line plots of walls, either in the t~ = 0 plane or in a
// fixed u~ plane. Pure function of its inputs: fixed 12-decimal formatting,
// no timestamps, byte-identical across runs.
struct RenderSpec {
    enum class Plane { T0, U };
    Plane plane = Plane::T0;
    Rational u_value = 0;  // for Plane::U
    double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
    int samples = 256;
    int width = 820, height = 620;
    bool annotate_pw = false;
    bool annotate_asymptotes = false;
    bool annotate_mu = false;
};

struct RenderWall {
    std::string label;
    WallConic conic;
};

std::string render_svg(const std::vector<RenderWall>& walls, const SliceFrame& frame,
                       const std::vector<Rational>& mu_lines, const RenderSpec& spec);

} // namespace wallscan
