#include "crosskit/realize.hpp"

#include <algorithm>

#include "crosskit/planarity.hpp"

namespace crosskit {

namespace {

// Strand graph of one candidate: vertices plus one node per crossing pair,
// chains threaded according to the current per-edge orders.
struct Candidate {
  std::vector<std::pair<int, int>> strands;
  std::vector<int> owner;  // strand -> graph edge id
};

Candidate build_strands(const WeightedGraph& g, int n,
                        const std::vector<std::vector<int>>& orders) {
  Candidate c;
  for (int e = 0; e < g.edge_count(); ++e) {
    int prev = g.edges()[std::size_t(e)].u;
    for (int pi : orders[std::size_t(e)]) {
      c.strands.push_back({prev, n + pi});
      c.owner.push_back(e);
      prev = n + pi;
    }
    c.strands.push_back({prev, g.edges()[std::size_t(e)].v});
    c.owner.push_back(e);
  }
  return c;
}

}  // namespace

std::optional<Drawing> realize(const WeightedGraph& g,
                               const std::vector<std::pair<int, int>>& pairs_in) {
  const int n = g.vertex_count();
  const int m = g.edge_count();

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(pairs_in.size());
  for (auto [a, b] : pairs_in) {
    require(a >= 0 && a < m && b >= 0 && b < m, "crossing pair edge id out of range");
    require(a != b, "edge paired with itself");
    const auto& ea = g.edges()[std::size_t(a)];
    const auto& eb = g.edges()[std::size_t(b)];
    require(ea.u != eb.u && ea.u != eb.v && ea.v != eb.u && ea.v != eb.v,
            "adjacent edges cannot cross");
    pairs.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(pairs.begin(), pairs.end());
  require(std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end(),
          "crossing pair listed twice");

  const int t = int(pairs.size());
  std::vector<std::vector<int>> partners(static_cast<std::size_t>(m));  // pair indices per edge
  for (int i = 0; i < t; ++i) {
    partners[std::size_t(pairs[std::size_t(i)].first)].push_back(i);
    partners[std::size_t(pairs[std::size_t(i)].second)].push_back(i);
  }

  // Odometer over per-edge orders: each wheel runs through the permutations of
  // that edge's partner list in lexicographic order.
  std::vector<std::vector<int>> orders = partners;
  std::vector<int> wheels;  // edges with more than one possible order
  for (int e = 0; e < m; ++e)
    if (orders[std::size_t(e)].size() > 1) wheels.push_back(e);

  for (;;) {
    Candidate c = build_strands(g, n, orders);
    Embedding emb = planar_embedding(n + t, c.strands);
    if (emb.planar) {
      for (auto& rot : emb.rotations)
        for (auto& s : rot) s.edge = c.owner[std::size_t(s.edge)];
      PlaneGraph map = PlaneGraph::from_rotations(emb.rotations, n);
      // dummies whose rotation does not alternate are touchings, not
      // crossings; remove them so the result is a genuine drawing
      for (int v = n; v < map.node_count(); ++v) {
        if (!map.node_alive(v)) continue;
        auto darts = map.darts_out(v);
        int e0 = map.edge_of_seg(PlaneGraph::seg_of(darts[0]));
        int e2 = map.edge_of_seg(PlaneGraph::seg_of(darts[2]));
        if (e0 != e2) map.smooth_touching(v);
      }
      Drawing d(g, std::move(map));
      d.log("realized from a prescribed crossing set of " + std::to_string(t) + " pairs");
      d.validate(true);
      return d;
    }
    // advance the odometer (last wheel fastest)
    std::size_t w = wheels.size();
    while (w > 0) {
      auto& ord = orders[std::size_t(wheels[w - 1])];
      if (std::next_permutation(ord.begin(), ord.end())) break;
      --w;  // ord is sorted again; carry into the previous wheel
    }
    if (w == 0) return std::nullopt;
  }
}

}  // namespace crosskit
