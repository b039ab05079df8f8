#pragma once

// Straight-line drawings on explicit coordinates.  Crossings are decided by
// signed-area orientation tests; inputs that are not in general position
// (duplicate points, collinear triples touching a relevant pair) are nudged
// by a deterministic perturbation before counting.

#include <utility>
#include <vector>

#include "crosskit/graph.hpp"

namespace crosskit {

struct Vec2 {
  double x = 0;
  double y = 0;
};

struct GeometricDrawing {
  std::vector<Vec2> points;                  // vertex -> position
  std::vector<std::vector<Vec2>> polylines;  // edge -> sampled curve
};

// Weighted sum over independent edge pairs of g whose straight segments
// properly cross when vertex i sits at points[i].  Degenerate placements are
// perturbed deterministically; a point set that stays degenerate (duplicate
// points at extreme magnitudes) raises domain_error.
double straight_line_crossings(std::vector<Vec2> points, const WeightedGraph& g);

// The straight-line drawing itself, after the same general-position
// perturbation that straight_line_crossings applies.
GeometricDrawing straight_line_drawing(std::vector<Vec2> points,
                                       const WeightedGraph& g);

}  // namespace crosskit
