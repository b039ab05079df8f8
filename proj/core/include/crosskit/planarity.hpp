#pragma once

// Thin wrapper around a linear-time planarity test: accept/reject, a
// combinatorial embedding on accept, and a witness subgraph on reject.

#include <utility>
#include <vector>

#include "crosskit/plane_graph.hpp"

namespace crosskit {

struct Embedding {
  bool planar = false;
  // per node, the cyclic order of incident segments; stub edge ids are the
  // caller's indices into the input edge list
  std::vector<std::vector<PlaneGraph::Stub>> rotations;
  // on reject: the edges (as input indices) of a Kuratowski subdivision
  std::vector<int> witness_edges;
};

// n nodes, simple undirected edges; parallel edges and loops are rejected
Embedding planar_embedding(int n, const std::vector<std::pair<int, int>>& edges);

bool is_planar(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace crosskit
