#pragma once

// Balanced cycle separators on plane triangulations.  A BFS tree is grown
// from the smallest live node; every non-tree segment closes a fundamental
// cycle, which splits the sphere in two.  The candidate minimizing the
// heavier side's weight wins (ties: shorter cycle, then smaller segment id).
// On a triangulation some fundamental cycle always leaves at most 2/3 of
// the weight on each side; `balanced` reports whether the winner does.

#include <vector>

#include "crosskit/plane_graph.hpp"

namespace crosskit {

struct CycleCut {
  std::vector<int> nodes;         // cycle nodes, in cyclic order
  std::vector<char> face_inside;  // by face id: 1 = seed side of the cycle
  double inside = 0;              // weight strictly on the seed side
  double outside = 0;             // weight strictly on the other side
  bool balanced = false;          // both sides <= 2/3 (+1e-9)
};

// weights: one entry per node of t (dead nodes ignored), summing to 1 over
// live nodes within 1e-9.  t must be connected and triangulated: every face
// a triangle with three distinct corners.  Weight on cycle nodes counts for
// neither side.
CycleCut cycle_separator(const PlaneGraph& t, const std::vector<double>& weights);

}  // namespace crosskit
