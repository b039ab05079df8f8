#pragma once

// A drawing of a weighted graph, held combinatorially: the planarization (one
// degree-4 dummy node per crossing) with its embedding is the single source of
// truth; rotations and per-edge crossing lists are derived views.  Edge ids in
// the planarization are indices into graph().edges().

#include <string>
#include <utility>
#include <vector>

#include "crosskit/graph.hpp"
#include "crosskit/plane_graph.hpp"

namespace crosskit {

class Drawing {
 public:
  Drawing() = default;
  Drawing(WeightedGraph g, PlaneGraph m) : graph_(std::move(g)), map_(std::move(m)) {}

  // provenance: free-form log of the operations that produced this drawing
  const std::vector<std::string>& ops() const { return ops_; }
  void log(std::string op) { ops_.push_back(std::move(op)); }

  // embed a planar graph (throws structure_error when it is not planar)
  static Drawing planar(const WeightedGraph& g);

  // build from an explicit rotation system over vertices and crossing dummies
  static Drawing from_rotations(WeightedGraph g,
                                const std::vector<std::vector<PlaneGraph::Stub>>& rotations);

  const WeightedGraph& graph() const { return graph_; }
  const PlaneGraph& map() const { return map_; }
  PlaneGraph& mutable_map() { return map_; }  // construction code; re-validate after

  bool drawn(int e) const;  // whether edge e has a curve in the planarization
  int drawn_edges() const;

  // cyclic order of edge ids around vertex v
  std::vector<int> rotation_of(int v) const;
  // edges crossed by e, in order along its curve from the lower endpoint
  std::vector<int> crossing_list(int e) const;
  // the two edges meeting at a crossing dummy
  std::pair<int, int> crossing_at(int dummy) const;
  // sorted multiset of crossing pairs (smaller edge id first)
  std::vector<std::pair<int, int>> crossing_pairs() const;
  int crossing_count() const;
  ExactValue crossing_weight() const;

  // no pair of edges crosses twice and no adjacent pair crosses
  bool is_simple() const;

  // structural audit of the map plus drawing-level consistency; with
  // `require_all_drawn` every graph edge must have a curve
  void validate(bool require_all_drawn = true) const;

  // sub-drawing induced by a vertex subset (relabeled by sorted position)
  Drawing restricted(const std::vector<int>& vertices) const;

 private:
  WeightedGraph graph_;
  PlaneGraph map_;
  std::vector<std::string> ops_;
};

std::string serialize_drawing(const Drawing& d);
Drawing parse_drawing(const std::string& text);

}  // namespace crosskit
