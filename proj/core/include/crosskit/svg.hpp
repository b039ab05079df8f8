#pragma once

// SVG rendering.  Combinatorial drawings are laid out with a barycentric
// (Tutte-style) placement per connected component: the longest face is
// pinned to a convex polygon and interior nodes relax to the average of
// their neighbors.  Crossing dummies become plain markers on the curves.
// Geometric drawings are rendered verbatim.

#include <string>

#include "crosskit/drawing.hpp"
#include "crosskit/geometry.hpp"

namespace crosskit {

std::string render_svg(const Drawing& d);
std::string render_svg(const GeometricDrawing& gd);

}  // namespace crosskit
