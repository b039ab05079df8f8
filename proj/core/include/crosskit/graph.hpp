#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crosskit/weight.hpp"

namespace crosskit {

// Simple undirected weighted graph, vertices 0..n-1, weights in [0,1], no loops,
// no parallel edges.  Edges are kept sorted by (u,v) so everything downstream is
// deterministic.
class WeightedGraph {
 public:
  struct Edge {
    int u, v;  // u < v
    Weight w;
  };

  WeightedGraph() = default;
  explicit WeightedGraph(int n) : n_(n) { require(n >= 0, "negative vertex count"); }

  int vertex_count() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(int u, int v, Weight w);
  void set_edge(int u, int v, Weight w);  // add or overwrite; w=0 removes
  bool has_edge(int u, int v) const;
  Weight weight(int u, int v) const;  // zero when absent
  std::vector<int> neighbors(int u) const;

  // Total weight with ordered-pair double counting on the overlap: edges with
  // both endpoints in S∩T count twice.
  ExactValue pair_mass(const std::vector<int>& s, const std::vector<int>& t) const;

  // lcm of weight denominators when it stays below 1e15, else nullopt (callers
  // then fall back to double arithmetic).
  std::optional<std::int64_t> common_denominator() const;

  bool operator==(const WeightedGraph& o) const;

 private:
  void reindex();
  int n_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<std::int64_t, int> index_;  // key u*n+v -> edge position
};

// Partition of 0..n-1 into nonempty classes; canonical order: classes sorted by
// their smallest member, members sorted ascending.
class VertexPartition {
 public:
  VertexPartition() = default;
  VertexPartition(int n, std::vector<std::vector<int>> classes);
  static VertexPartition one_class(int n);
  static VertexPartition singletons(int n);
  static VertexPartition blowup_classes(int n_base, int m);  // {um..um+m-1}

  int vertex_count() const { return n_; }
  int class_count() const { return int(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int v) const { return class_of_[v]; }
  int class_size(int i) const { return int(classes_[i].size()); }
  bool equitable() const;  // sizes differ by at most one

 private:
  int n_ = 0;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

struct QuotientGraph {
  WeightedGraph base;            // k vertices, weight e(Vi,Vj)/(|Vi||Vj|)
  std::vector<Weight> diagonal;  // e(Vi,Vi)/|Vi|^2, kept for reconstruction only
  std::vector<int> class_sizes;
};

// --- operations ---------------------------------------------------------

WeightedGraph parse_graph_text(const std::string& text);
std::string serialize_graph_text(const WeightedGraph& g);
WeightedGraph parse_graph_json(const std::string& text);
std::string serialize_graph_json(const WeightedGraph& g);

WeightedGraph blow_up(const WeightedGraph& g, int m);
QuotientGraph quotient(const WeightedGraph& g, const VertexPartition& p);
WeightedGraph averaged(const WeightedGraph& g, const VertexPartition& p);
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vertices);
WeightedGraph random_graph(int n, double p, std::uint64_t seed);
WeightedGraph complete_graph(int n);
WeightedGraph complete_bipartite(int a, int b);

// max(0, m-3n+6 [n>=3], m^3/(64 n^2) [m>=4n]) on the positive-weight support;
// a certified lower bound for unit-weight graphs.
ExactValue crossing_lower_bound(const WeightedGraph& g);

}  // namespace crosskit
