#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crosskit/graph.hpp"

namespace crosskit {

// Witness pair for the labeled cut distance: value = |e_G1(S,T) - e_G2(S,T)| / n^2.
struct CutWitness {
  std::vector<int> s, t;
  ExactValue value;
};

struct RegularityReport {
  VertexPartition partition;
  double epsilon = 0.0;
  ExactValue defect;            // best witness value vs averaged(G, partition)
  CutWitness witness;           // the witness realizing `defect`
  int class_count = 0;
  int iterations = 0;
  std::string status;           // "certified" | "heuristic" | "budget"
  // per refinement step: (index after split, index after rebalance)
  std::vector<std::pair<double, double>> index_history;
};

// Exhaustive witness search, O(2^n * n) by Gray-code row-sum maintenance.
// Both graphs must share the vertex count; n is capped (default 24).
CutWitness cut_distance_exact(const WeightedGraph& g1, const WeightedGraph& g2,
                              int vertex_limit = 24);

// Alternating maximization from seeded restarts; returns a valid witness, so its
// value is always a lower bound on the exact cut distance.
CutWitness cut_distance_heuristic(const WeightedGraph& g1, const WeightedGraph& g2,
                                  int restarts, std::uint64_t seed);

struct FkOptions {
  double epsilon = 0.25;
  int max_classes = 64;
  int min_classes = 1;   // callers that need a nondegenerate quotient raise this
  std::uint64_t seed = 0;
  int exact_limit = 24;  // exact witness search for n <= this
  int heuristic_restarts = 32;
  int iteration_cap = 64;
};

// Witness-refinement partitioner: split every class 4-ways by the witness pair,
// rebalance to equitable, repeat while a witness above epsilon exists (or the
// class count is still below min_classes).  A vacuous split (witness sets that
// refine nothing, e.g. (V,V) against the one-class average) falls back to
// deterministic bisection so the loop always makes progress.
RegularityReport fk_partition(const WeightedGraph& g, const FkOptions& opt);

struct RegularityCheck {
  CutWitness witness;
  bool ok = false;         // witness value <= epsilon
  bool certified = false;  // witness came from the exhaustive search
};

RegularityCheck verify_regularity(const WeightedGraph& g, const VertexPartition& p,
                                  double epsilon, int exact_limit = 24,
                                  int heuristic_restarts = 32, std::uint64_t seed = 0);

// Mean-square (L2) index of the step approximation; nondecreasing under refinement.
double partition_index(const WeightedGraph& g, const VertexPartition& p);

}  // namespace crosskit
