#pragma once

#include <cstdint>

#include "crosskit/drawing.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/util.hpp"

namespace crosskit {

struct CrSolution {
  ExactValue value;                 // crossing weight of `drawing`
  Drawing drawing;
  bool exact = false;               // proven optimal
  std::uint64_t nodes_explored = 0; // search nodes popped (0 for pure heuristics)
  Budget budget;                    // the limits the run was given
};

// Best-first search over candidate crossing sets in nondecreasing exact cost,
// each tested for realizability; the first success at the frontier cost is
// optimal.  Starts from a heuristic incumbent; a blown budget degrades to that
// certified upper bound with exact=false instead of failing.
CrSolution crossing_number_exact(const WeightedGraph& g, Budget budget = Budget::unlimited());

// Seeded multi-restart heuristic: greedy maximal planar subgraph (random
// weight-biased edge orders), optimal insertion of the rest, one refinement
// sweep; best drawing over all restarts.  Restarts run in parallel; the
// result depends only on the seed.
CrSolution crossing_number_upper(const WeightedGraph& g, int restarts, std::uint64_t seed);

// Crossing number of a quotient graph: exact below the edge-count feasibility
// threshold, heuristic upper bound above it.  The diagonal is ignored.
CrSolution crossing_number_quotient(const QuotientGraph& q, Budget budget = Budget::unlimited());

// worker threads for parallel loops: CROSSKIT_THREADS when set, else hardware
int worker_threads(int cap);

}  // namespace crosskit
