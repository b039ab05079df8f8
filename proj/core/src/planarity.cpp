#include "crosskit/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>
#include <set>

namespace crosskit {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

Embedding planar_embedding(int n, const std::vector<std::pair<int, int>>& edges) {
  require(n >= 0, "negative node count");
  std::set<std::pair<int, int>> seen;
  BoostGraph g(static_cast<std::size_t>(n));
  int idx = 0;
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
    require_structure(u != v, "loop edge");
    auto key = std::minmax(u, v);
    require_structure(seen.insert({key.first, key.second}).second, "parallel edge");
    boost::add_edge(std::size_t(u), std::size_t(v), idx++, g);
  }

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embed_store(static_cast<std::size_t>(n));
  auto embedding = boost::make_iterator_property_map(embed_store.begin(),
                                                     boost::get(boost::vertex_index, g));
  std::vector<EdgeDesc> witness;

  Embedding out;
  out.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(witness));

  auto eidx = boost::get(boost::edge_index, g);
  if (out.planar) {
    out.rotations.resize(std::size_t(n));
    for (int v = 0; v < n; ++v)
      for (EdgeDesc e : embed_store[std::size_t(v)]) {
        int a = int(boost::source(e, g)), b = int(boost::target(e, g));
        out.rotations[std::size_t(v)].push_back({a == v ? b : a, eidx[e]});
      }
  } else {
    for (EdgeDesc e : witness) out.witness_edges.push_back(eidx[e]);
    std::sort(out.witness_edges.begin(), out.witness_edges.end());
    out.witness_edges.erase(std::unique(out.witness_edges.begin(), out.witness_edges.end()),
                            out.witness_edges.end());
  }
  return out;
}

bool is_planar(int n, const std::vector<std::pair<int, int>>& edges) {
  BoostGraph g(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
    boost::add_edge(std::size_t(u), std::size_t(v), g);
  }
  return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace crosskit
