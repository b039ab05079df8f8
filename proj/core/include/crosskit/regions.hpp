#pragma once

// Region subdivision of a drawing.  The planarization is completed into a
// refined triangulation (the chart) in which every face touches at most one
// graph vertex and every graph vertex is insulated behind a ring of
// scaffold nodes.  Regions are connected unions of closed chart faces that
// partition the sphere; the subdivision keeps two invariants:
//
//   (I)  every graph vertex lies strictly inside one region (all its
//        incident faces belong to that region), and
//   (II) no region contains more than ceil(eps^2 n) graph vertices.
//
// Very small eps (eps^2 n <= 1) yields the trivial answer: one insulated
// disk per vertex plus the rest of the sphere.  Otherwise regions are split
// recursively with balanced cycle separators; vertices sitting on a
// separator cycle are pulled to the lighter side together with their whole
// disk, which detours the boundary around them.

#include <cstdint>
#include <vector>

#include "crosskit/drawing.hpp"
#include "crosskit/plane_graph.hpp"

namespace crosskit {

struct RegionSubdivision {
  PlaneGraph chart;                               // refined triangulation
  std::vector<std::vector<int>> region_faces;     // chart face ids, sorted
  std::vector<std::vector<int>> region_vertices;  // graph vertices, sorted
  std::vector<int> vertex_region;                 // by graph vertex id
  double epsilon = 0;
  int cap = 0;                       // ceil(eps^2 n): vertex budget per region
  std::int64_t boundary_incidences = 0;  // curve-owned segments on region borders
};

// Subdivide d's sphere into regions for accuracy parameter eps in (0, 1].
RegionSubdivision subdivide_regions(const Drawing& d, double eps);

// Chart segments with exactly one flanking face inside region r, sorted.
std::vector<int> region_boundary_segs(const RegionSubdivision& s, int r);

}  // namespace crosskit
