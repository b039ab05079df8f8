#pragma once

// Drawing transfer between two graphs on the same vertex set that are close
// in the labeled cut metric.  Starting from a drawing of G1, every edge of G2
// that runs between two different clusters picks a random representative G1
// edge of the same cluster pair and rides alongside its curve; edges inside a
// cluster are routed directly.  Cluster pairs with too little G1 weight
// ("lonely" pairs) get their G2 edges reinserted at the end, after the
// transferred drawing has been made simple and locally optimal.

#include <cstdint>
#include <utility>
#include <vector>

#include "crosskit/drawing.hpp"
#include "crosskit/graph.hpp"

namespace crosskit {

struct TransferTrace {
  // labeled cut distance between the two graphs, used for the lonely test
  double closeness = 0;
  bool closeness_exact = false;  // exhaustive witness, or a heuristic lower bound

  // cluster pairs (i < j) carrying a G2 edge whose G1 weight is at most
  // closeness * n^2, and the G2 edges between them (reinserted last)
  std::vector<std::pair<int, int>> lonely_pairs;
  std::vector<int> lonely_edges;

  // representative[e] = G1 edge whose curve G2 edge e rides (-1 when e is
  // short, lonely, or fell back to a plain reroute)
  std::vector<int> representative;
  int rerouted = 0;  // riders whose composed route degenerated (plain dual path)

  // crossings of the final drawing by the kinds of edges involved; "bad"
  // means some cluster holds an endpoint of each edge
  std::int64_t good_long_long = 0;
  std::int64_t good_long_short = 0;
  std::int64_t good_short_short = 0;
  std::int64_t bad = 0;
  std::int64_t lonely_crossings = 0;  // involving a reinserted lonely edge

  // diagnostic: curves of the source drawing with fewer crossings than
  // closeness^{1/8} * n^2 / 16 count as light
  double light_threshold = 0;
  int light_edges = 0;
};

// Redraw g2 on top of d1 (a simple, locally optimal drawing of g1 on the
// same vertices).  Deterministic in `seed`.  The output drawing is simple,
// locally optimal up to the final lonely reinsertions, and its crossing
// weight can never drop below the true crossing number of g2.  With g2 == g1
// and singleton clusters the crossing weight of d1 is preserved exactly.
std::pair<Drawing, TransferTrace> transfer_drawing(const WeightedGraph& g1,
                                                   const Drawing& d1,
                                                   const WeightedGraph& g2,
                                                   const VertexPartition& clusters,
                                                   std::uint64_t seed);

}  // namespace crosskit
