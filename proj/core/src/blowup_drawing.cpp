#include "crosskit/blowup_drawing.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crosskit/graph.hpp"
#include "crosskit/plane_graph.hpp"
#include "crosskit/util.hpp"

namespace crosskit {

namespace {

// edge id in g for the endpoint pair (a, b); edges() is sorted by endpoints
int edge_id_of(const WeightedGraph& g, int a, int b) {
  if (a > b) std::swap(a, b);
  const auto& es = g.edges();
  auto it = std::lower_bound(
      es.begin(), es.end(), std::make_pair(a, b),
      [](const WeightedGraph::Edge& e, const std::pair<int, int>& k) {
        return std::make_pair(e.u, e.v) < k;
      });
  require_structure(it != es.end() && it->u == a && it->v == b,
                    "bundle edge missing from the blown-up graph");
  return int(it - es.begin());
}

// Forced route that duplicates the chain at rotation position t of `anchor`.
// The copy starts in the corner before position 0, first crosses the leading
// piece of every sibling chain at positions 0..t-1 (the cluster-disk fan),
// then passes each crossing dummy along its own chain by cutting the flank
// piece next to it.  Faces come from the identity phi(d) = next(twin(d)):
// crossing the segment of dart x moves from face(x) to face(next(x)).
PlaneGraph::Route parallel_route(const PlaneGraph& m, int anchor, int t,
                                 int* far_end) {
  std::vector<int> ds = m.darts_out(anchor);
  PlaneGraph::Route r;
  r.source_face = m.face(ds[0]);
  for (int j = 0; j < t; ++j) {
    r.segs.push_back(PlaneGraph::seg_of(ds[std::size_t(j)]));
    r.exit_face.push_back(m.face(ds[std::size_t(j)]));
    r.entry_face.push_back(m.face(PlaneGraph::twin(ds[std::size_t(j)])));
  }
  int c = ds[std::size_t(t)];
  while (m.is_dummy(m.to(c))) {
    int back = PlaneGraph::twin(c);  // dart out of the dummy, toward us
    int cut = m.next(back);          // crossing piece on our flank
    r.segs.push_back(PlaneGraph::seg_of(cut));
    r.exit_face.push_back(m.face(c));
    r.entry_face.push_back(m.face(PlaneGraph::twin(cut)));
    int cont = m.next(cut);  // continuation strand of the chain we follow
    require_structure(m.edge_of_seg(PlaneGraph::seg_of(cont)) ==
                          m.edge_of_seg(PlaneGraph::seg_of(c)),
                      "crossing dummy without an alternating rotation");
    c = cont;
  }
  r.target_face = m.face(c);
  r.cost = std::int64_t(r.segs.size());
  r.hops = int(r.segs.size());
  *far_end = m.to(c);
  return r;
}

}  // namespace

Drawing blow_up_drawing(const Drawing& d, int m) {
  require(m >= 1, "blow-up factor must be at least 1");
  if (m == 1) return d;
  require(d.is_simple(),
          "blow-up needs a simple drawing (no double or adjacent crossings)");

  const WeightedGraph& g = d.graph();
  const PlaneGraph& src = d.map();
  const int n = g.vertex_count();
  WeightedGraph g2 = blow_up(g, m);

  // relabel the input map into the blown-up id space: vertex u becomes its
  // cluster's anchor copy u*m, live dummies follow after all n*m vertices
  std::vector<int> new_node(static_cast<std::size_t>(src.node_count()), -1);
  for (int v = 0; v < n; ++v) new_node[std::size_t(v)] = v * m;
  int next_id = n * m;
  for (int v = n; v < src.node_count(); ++v)
    if (src.node_alive(v) && src.is_dummy(v)) new_node[std::size_t(v)] = next_id++;

  std::vector<std::vector<PlaneGraph::Stub>> rot(
      static_cast<std::size_t>(next_id));
  for (int v = 0; v < src.node_count(); ++v) {
    if (new_node[std::size_t(v)] < 0) continue;
    for (int dart : src.darts_out(v)) {
      const WeightedGraph::Edge& e =
          g.edges()[std::size_t(src.edge_of_seg(PlaneGraph::seg_of(dart)))];
      rot[std::size_t(new_node[std::size_t(v)])].push_back(
          {new_node[std::size_t(src.to(dart))], edge_id_of(g2, e.u * m, e.v * m)});
    }
  }

  const bool all_drawn = d.drawn_edges() == g.edge_count();
  Drawing out = Drawing::from_rotations(std::move(g2), rot);
  for (const std::string& op : d.ops()) out.log(op);
  PlaneGraph& map = out.mutable_map();

  // clone every cluster: copy c of cluster u sits in the corner before the
  // anchor's first rotation slot and duplicates each incident chain in turn.
  // Rotation slots at the anchor are stable through the fan subdivisions, so
  // positions are re-read fresh for every curve.
  int curves = 0;
  for (int u = 0; u < n; ++u) {
    const int anchor = u * m;
    const int deg = map.degree(anchor);
    for (int c = 1; c < m; ++c) {
      const int clone = u * m + c;
      for (int t = 0; t < deg; ++t) {
        int far = -1;
        PlaneGraph::Route r = parallel_route(map, anchor, t, &far);
        map.insert_routed(clone, far, edge_id_of(out.graph(), clone, far), r);
        ++curves;
      }
    }
  }

  out.log("blow-up by " + std::to_string(m) + ": " + std::to_string(n) +
          " clusters, " + std::to_string(curves) + " bundle curves added");
  out.validate(all_drawn);
  return out;
}

bool good_crossing(const Drawing& d, int m, int dummy) {
  require(m >= 1 && d.graph().vertex_count() % m == 0,
          "good crossings need a cluster structure of uniform size");
  auto [e, f] = d.crossing_at(dummy);
  const auto& es = d.graph().edges();
  int cl[4] = {es[std::size_t(e)].u / m, es[std::size_t(e)].v / m,
               es[std::size_t(f)].u / m, es[std::size_t(f)].v / m};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (cl[i] == cl[j]) return false;
  return true;
}

int count_good_crossings(const Drawing& d, int m) {
  const PlaneGraph& map = d.map();
  int total = 0;
  for (int v = 0; v < map.node_count(); ++v)
    if (map.node_alive(v) && map.is_dummy(v) && good_crossing(d, m, v)) ++total;
  return total;
}

Drawing project_to(const Drawing& d, int m, const std::vector<int>& picks) {
  require(m >= 1, "projection factor must be at least 1");
  const int n2 = d.graph().vertex_count();
  require(n2 % m == 0, "vertex count is not a multiple of the cluster size");
  const int n = n2 / m;
  for (const auto& e : d.graph().edges())
    require(e.u / m != e.v / m, "edge inside a cluster: not a blow-up");
  require(int(picks.size()) == n, "one representative pick per cluster");
  for (int i = 0; i < n; ++i)
    require(picks[std::size_t(i)] >= 0 && picks[std::size_t(i)] < m,
            "representative pick out of range");
  if (m == 1) return d;

  std::vector<int> reps;
  reps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reps.push_back(i * m + picks[std::size_t(i)]);
  return d.restricted(reps);
}

Drawing project_random(const Drawing& d, int m, std::uint64_t seed) {
  require(m >= 1, "projection factor must be at least 1");
  const int n2 = d.graph().vertex_count();
  require(n2 % m == 0, "vertex count is not a multiple of the cluster size");
  Rng rng = Rng::stream(seed, 0x9d07);
  std::vector<int> picks;
  picks.reserve(static_cast<std::size_t>(n2 / m));
  for (int i = 0; i < n2 / m; ++i)
    picks.push_back(int(rng.below(std::uint64_t(m))));
  Drawing out = project_to(d, m, picks);
  if (m > 1) out.log("projection kept one random copy per cluster, seed " +
                     std::to_string(seed));
  return out;
}

}  // namespace crosskit
