#pragma once

// Triangulated arena over a drawing's planarization.  The combinatorial map
// of a drawing is completed into a plane triangulation: disconnected pieces
// are first tied together with scaffold bridges, then every face is filled
// with chords (scaffold segments carrying no edge id) until each face is a
// triangle with three distinct corners.  Chords are preferred; a face whose
// walk repeats nodes, or whose candidate chords all collide with existing
// adjacencies, falls back to a scaffold apex joined to every corner.
//
// The arena keeps the planarization's node ids, so graph vertices and
// crossing dummies of the input drawing are directly addressable in it.

#include "crosskit/drawing.hpp"
#include "crosskit/plane_graph.hpp"

namespace crosskit {

// Connect the live components of m with scaffold segments until one
// component remains; each bridge lands in the current largest face of the
// component containing the smallest node.  Returns the number of bridges.
int bridge_components(PlaneGraph& m);

// Chord every live face of m until each is a triangle with three distinct
// corners.  Chords between scaffold nodes are preferred; faces that cannot
// be chorded receive a scaffold apex.
void triangulate_faces(PlaneGraph& m);

// Copy d's planarization, bridge it, and triangulate every face.  Every face
// of the result has exactly three distinct boundary nodes.  Needs at least
// three live nodes.
PlaneGraph triangulate_planarization(const Drawing& d);

}  // namespace crosskit
