#include "crosskit/drawing.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <nlohmann/json.hpp>

#include "crosskit/planarity.hpp"

namespace crosskit {

Drawing Drawing::planar(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& e : g.edges()) pairs.push_back({e.u, e.v});
  Embedding emb = planar_embedding(g.vertex_count(), pairs);
  require_structure(emb.planar, "Drawing::planar: graph is not planar");
  Drawing d(g, PlaneGraph::from_rotations(emb.rotations, g.vertex_count()));
  d.validate(true);
  return d;
}

Drawing Drawing::from_rotations(WeightedGraph g,
                                const std::vector<std::vector<PlaneGraph::Stub>>& rotations) {
  PlaneGraph m = PlaneGraph::from_rotations(rotations, g.vertex_count());
  Drawing d(std::move(g), std::move(m));
  d.validate(false);
  return d;
}

// dart at v carrying edge e, or -1 (a drawn edge has exactly one strand per endpoint)
static int strand_dart(const PlaneGraph& m, int v, int e) {
  int found = -1;
  for (int d : m.darts_out(v)) {
    if (m.edge_of_seg(PlaneGraph::seg_of(d)) != e) continue;
    require_structure(found < 0, "edge has multiple strands at an endpoint");
    found = d;
  }
  return found;
}

bool Drawing::drawn(int e) const {
  require(e >= 0 && e < graph_.edge_count(), "edge id out of range");
  return strand_dart(map_, graph_.edges()[e].u, e) >= 0;
}

int Drawing::drawn_edges() const {
  int c = 0;
  for (int e = 0; e < graph_.edge_count(); ++e)
    if (drawn(e)) ++c;
  return c;
}

std::vector<int> Drawing::rotation_of(int v) const {
  require(v >= 0 && v < graph_.vertex_count(), "vertex id out of range");
  std::vector<int> rot;
  for (int d : map_.darts_out(v)) rot.push_back(map_.edge_of_seg(PlaneGraph::seg_of(d)));
  return rot;
}

std::pair<int, int> Drawing::crossing_at(int dummy) const {
  require(dummy >= 0 && dummy < map_.node_count() && map_.node_alive(dummy) &&
              map_.is_dummy(dummy),
          "not a live dummy node");
  std::vector<int> darts = map_.darts_out(dummy);
  require_structure(darts.size() == 4, "crossing dummy must have degree 4");
  int e[4];
  for (int i = 0; i < 4; ++i) e[i] = map_.edge_of_seg(PlaneGraph::seg_of(darts[i]));
  require_structure(e[0] == e[2] && e[1] == e[3] && e[0] != e[1],
                    "dummy rotation does not alternate between two edges");
  return {std::min(e[0], e[1]), std::max(e[0], e[1])};
}

std::vector<int> Drawing::crossing_list(int e) const {
  require(e >= 0 && e < graph_.edge_count(), "edge id out of range");
  std::vector<int> out;
  if (!drawn(e)) return out;
  for (int dummy : map_.chain_dummies(e, graph_.edges()[e].u)) {
    auto [a, b] = crossing_at(dummy);
    out.push_back(a == e ? b : a);
  }
  return out;
}

std::vector<std::pair<int, int>> Drawing::crossing_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int v = graph_.vertex_count(); v < map_.node_count(); ++v)
    if (map_.node_alive(v) && map_.is_dummy(v)) pairs.push_back(crossing_at(v));
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

int Drawing::crossing_count() const {
  int c = 0;
  for (int v = graph_.vertex_count(); v < map_.node_count(); ++v)
    if (map_.node_alive(v) && map_.is_dummy(v)) ++c;
  return c;
}

ExactValue Drawing::crossing_weight() const {
  ExactValue total = ExactValue::zero();
  const auto& edges = graph_.edges();
  for (int v = graph_.vertex_count(); v < map_.node_count(); ++v) {
    if (!map_.node_alive(v) || !map_.is_dummy(v)) continue;
    auto [a, b] = crossing_at(v);
    total = total.plus(weight_product(edges[a].w, edges[b].w));
  }
  return total;
}

bool Drawing::is_simple() const {
  auto pairs = crossing_pairs();
  const auto& edges = graph_.edges();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i] == pairs[i - 1]) return false;  // same pair crosses twice
    const auto& a = edges[pairs[i].first];
    const auto& b = edges[pairs[i].second];
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;  // adjacent
  }
  return true;
}

void Drawing::validate(bool require_all_drawn) const {
  map_.validate();
  const int n = graph_.vertex_count();
  const int m = graph_.edge_count();
  require_structure(map_.node_count() >= n, "planarization is missing graph vertices");
  require_structure(map_.graph_vertices() == n, "planarization vertex count mismatch");
  for (int v = 0; v < n; ++v)
    require_structure(map_.node_alive(v) && !map_.is_dummy(v),
                      "graph vertex missing from planarization");
  for (int v = n; v < map_.node_count(); ++v)
    require_structure(!map_.node_alive(v) || map_.is_dummy(v),
                      "unexpected non-dummy node beyond the graph vertices");

  // every live segment belongs to a real edge; count segments per edge
  std::vector<int> segs_of_edge(m, 0);
  for (int s = 0; s < map_.dart_limit() / 2; ++s) {
    if (!map_.seg_alive(s)) continue;
    int e = map_.edge_of_seg(s);
    require_structure(e >= 0 && e < m, "segment with no owning edge");
    ++segs_of_edge[e];
  }

  for (int v = n; v < map_.node_count(); ++v)
    if (map_.node_alive(v)) crossing_at(v);  // degree-4 + alternation audit

  for (int e = 0; e < m; ++e) {
    int du = strand_dart(map_, graph_.edges()[e].u, e);
    int dv = strand_dart(map_, graph_.edges()[e].v, e);
    require_structure((du >= 0) == (dv >= 0), "edge drawn at one endpoint only");
    if (du < 0) {
      require_structure(segs_of_edge[e] == 0, "undrawn edge owns segments");
      require_structure(!require_all_drawn, "edge is not drawn");
      continue;
    }
    // the chain from u must account for every segment of e (so it ends at v)
    int chain_len = int(map_.chain_segs(e, graph_.edges()[e].u).size());
    require_structure(chain_len == segs_of_edge[e], "edge curve is not a single chain");
  }
}

Drawing Drawing::restricted(const std::vector<int>& vertices) const {
  std::vector<int> kept = vertices;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (int v : kept) require(v >= 0 && v < graph_.vertex_count(), "vertex id out of range");

  WeightedGraph sub = induced_subgraph(graph_, kept);
  std::vector<int> new_vertex(graph_.vertex_count(), -1);
  for (int i = 0; i < int(kept.size()); ++i) new_vertex[kept[i]] = i;

  // old edge id -> new edge id (edges of `sub` are sorted, so binary-search works)
  std::vector<int> new_edge(graph_.edge_count(), -1);
  for (int i = 0; i < sub.edge_count(); ++i) {
    const auto& se = sub.edges()[i];
    int ou = kept[se.u], ov = kept[se.v];
    const auto& old_edges = graph_.edges();
    auto it = std::lower_bound(old_edges.begin(), old_edges.end(), std::make_pair(ou, ov),
                               [](const WeightedGraph::Edge& a, const std::pair<int, int>& b) {
                                 return std::make_pair(a.u, a.v) < b;
                               });
    require_structure(it != old_edges.end() && it->u == ou && it->v == ov,
                      "induced edge missing from the host graph");
    new_edge[int(it - old_edges.begin())] = i;
  }

  // peel off every edge that does not survive, then read the surviving rotations
  PlaneGraph work = map_;
  for (int e = 0; e < graph_.edge_count(); ++e)
    if (new_edge[e] < 0 && drawn(e)) work.remove_edge_chain(e);

  std::vector<int> new_node(work.node_count(), -1);
  for (int i = 0; i < int(kept.size()); ++i) new_node[kept[i]] = i;
  int next_id = int(kept.size());
  for (int v = 0; v < work.node_count(); ++v)
    if (work.node_alive(v) && work.is_dummy(v)) new_node[v] = next_id++;

  std::vector<std::vector<PlaneGraph::Stub>> rot(next_id);
  for (int v = 0; v < work.node_count(); ++v) {
    if (new_node[v] < 0 || !work.node_alive(v)) continue;
    for (int d : work.darts_out(v)) {
      int e = work.edge_of_seg(PlaneGraph::seg_of(d));
      require_structure(e >= 0 && new_edge[e] >= 0, "stray segment survived the restriction");
      rot[new_node[v]].push_back({new_node[work.to(d)], new_edge[e]});
    }
  }

  Drawing d(std::move(sub), PlaneGraph::from_rotations(rot, int(kept.size())));
  d.ops_ = ops_;
  d.log("restricted to " + std::to_string(kept.size()) + " vertices");
  d.validate(false);
  return d;
}

// --- serialization --------------------------------------------------------

std::string serialize_drawing(const Drawing& d) {
  using nlohmann::json;
  const PlaneGraph& m = d.map();
  const int n = d.graph().vertex_count();

  // compact live node ids: vertices keep their ids, live dummies follow in order
  std::vector<int> new_node(m.node_count(), -1);
  for (int v = 0; v < n; ++v) new_node[v] = v;
  int next_id = n;
  for (int v = n; v < m.node_count(); ++v)
    if (m.node_alive(v) && m.is_dummy(v)) new_node[v] = next_id++;

  json rotations = json::array();
  for (int v = 0; v < m.node_count(); ++v) {
    if (new_node[v] < 0) continue;
    json rot = json::array();
    for (int dart : m.darts_out(v)) {
      int e = m.edge_of_seg(PlaneGraph::seg_of(dart));
      rot.push_back(json::array({new_node[m.to(dart)], e}));
    }
    rotations.push_back(std::move(rot));
  }

  json crossings = json::array();
  for (auto [a, b] : d.crossing_pairs()) crossings.push_back(json::array({a, b}));

  json j;
  j["format"] = "crosskit-drawing";
  j["version"] = 1;
  j["graph"] = json::parse(serialize_graph_json(d.graph()));
  j["planarization"] = {{"graph_vertices", n}, {"rotations", std::move(rotations)}};
  j["crossings"] = std::move(crossings);
  j["crossing_weight"] = d.crossing_weight().decimal_or_fraction();
  j["ops"] = d.ops();
  return j.dump(2) + "\n";
}

Drawing parse_drawing(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw parse_error(std::string("bad drawing document: ") + ex.what());
  }
  try {
    if (j.at("format") != "crosskit-drawing") throw parse_error("not a drawing document");
    WeightedGraph g = parse_graph_json(j.at("graph").dump());
    const json& plan = j.at("planarization");
    int gv = plan.at("graph_vertices").get<int>();
    if (gv != g.vertex_count()) throw parse_error("planarization vertex count mismatch");
    std::vector<std::vector<PlaneGraph::Stub>> rot;
    for (const json& node : plan.at("rotations")) {
      rot.emplace_back();
      for (const json& stub : node)
        rot.back().push_back({stub.at(0).get<int>(), stub.at(1).get<int>()});
    }
    Drawing d = Drawing::from_rotations(std::move(g), rot);
    if (j.contains("ops"))
      for (const json& op : j["ops"]) d.log(op.get<std::string>());
    // cross-check the advisory crossing list if the document carries one
    if (j.contains("crossings")) {
      std::vector<std::pair<int, int>> listed;
      for (const json& c : j["crossings"]) listed.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
      std::sort(listed.begin(), listed.end());
      if (listed != d.crossing_pairs())
        throw parse_error("crossing list disagrees with the planarization");
    }
    return d;
  } catch (const json::exception& ex) {
    throw parse_error(std::string("bad drawing document: ") + ex.what());
  }
}

}  // namespace crosskit
