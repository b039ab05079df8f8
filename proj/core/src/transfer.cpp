#include "crosskit/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crosskit/cutmetric.hpp"
#include "crosskit/drawing.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/insertion.hpp"
#include "crosskit/plane_graph.hpp"
#include "crosskit/util.hpp"

namespace crosskit {

namespace {

// Routing costs over the working map, which layers G2 curves (edge ids
// shifted by |E1|) on top of the G1 blueprint.  Crossing a G1 curve with an
// endpoint in one of the rider's clusters is nearly free (the blueprint is
// deleted afterwards); foreign G1 curves and already-placed G2 curves are
// charged their weight so the dual search avoids them first.
std::vector<std::int64_t> rider_costs(const PlaneGraph& m, const WeightedGraph& g1,
                                      const WeightedGraph& g2,
                                      const VertexPartition& clusters, int cls_a,
                                      int cls_b) {
  const int m1 = g1.edge_count();
  auto charge = [](const Weight& w) {
    return std::int64_t(1) + (std::llround(w.value() * double(1 << 20)) << 8);
  };
  std::vector<std::int64_t> costs(std::size_t(m.dart_limit() / 2), 1);
  for (int s = 0; s < m.dart_limit() / 2; ++s) {
    if (!m.dart_alive(2 * s)) continue;
    int e = m.edge_of_seg(s);
    if (e < 0) continue;  // never present here; leave crossable just in case
    if (e >= m1) {
      costs[std::size_t(s)] = charge(g2.edges()[std::size_t(e - m1)].w);
      continue;
    }
    const WeightedGraph::Edge& ed = g1.edges()[std::size_t(e)];
    bool local = clusters.class_of(ed.u) == cls_a || clusters.class_of(ed.v) == cls_a ||
                 clusters.class_of(ed.u) == cls_b || clusters.class_of(ed.v) == cls_b;
    costs[std::size_t(s)] = local ? 1 : charge(ed.w);
  }
  return costs;
}

// Append the crossings of `piece` to `whole`.
void splice_route(PlaneGraph::Route& whole, const PlaneGraph::Route& piece) {
  whole.segs.insert(whole.segs.end(), piece.segs.begin(), piece.segs.end());
  whole.exit_face.insert(whole.exit_face.end(), piece.exit_face.begin(),
                         piece.exit_face.end());
  whole.entry_face.insert(whole.entry_face.end(), piece.entry_face.begin(),
                          piece.entry_face.end());
}

// Rotate around node `at` from the corner with face label `from_face` to the
// corner before dart `to_dart`, crossing the segments in between on the
// cheaper side.  Crossing the segment of dart x moves from face(x) to
// face(next(x)), so the forward sweep crosses ds[a], ds[a+1], ... and the
// backward sweep crosses ds[a-1], ds[a-2], ...
void cross_fan(const PlaneGraph& m, int at, int from_face, int to_dart,
               PlaneGraph::Route& route) {
  std::vector<int> ds = m.darts_out(at);
  const int deg = int(ds.size());
  int ia = -1, ic = -1;
  for (int t = 0; t < deg; ++t) {
    if (m.face(ds[std::size_t(t)]) == from_face && ia < 0) ia = t;
    if (ds[std::size_t(t)] == to_dart) ic = t;
  }
  require_structure(ia >= 0, "fan start face is not a corner at this node");
  require_structure(ic >= 0, "fan target dart does not leave this node");
  int fwd = (ic - ia + deg) % deg, bwd = (ia - ic + deg) % deg;
  if (fwd <= bwd) {
    for (int t = ia; t != ic; t = (t + 1) % deg) {
      route.segs.push_back(PlaneGraph::seg_of(ds[std::size_t(t)]));
      route.exit_face.push_back(m.face(ds[std::size_t(t)]));
      route.entry_face.push_back(m.face(ds[std::size_t((t + 1) % deg)]));
    }
  } else {
    for (int t = ia; t != ic; t = (t - 1 + deg) % deg) {
      int p = (t - 1 + deg) % deg;
      route.segs.push_back(PlaneGraph::seg_of(ds[std::size_t(p)]));
      route.exit_face.push_back(m.face(ds[std::size_t(t)]));
      route.entry_face.push_back(m.face(ds[std::size_t(p)]));
    }
  }
}

// Ride alongside the chain starting at dart c0, cutting the flank piece at
// every crossing dummy (same bookkeeping as the blow-up bundle curves).
// Returns the final chain dart; the rider ends in face(result).
int ride_chain(const PlaneGraph& m, int c0, PlaneGraph::Route& route) {
  int c = c0;
  while (m.is_dummy(m.to(c))) {
    int back = PlaneGraph::twin(c);
    int cut = m.next(back);  // crossing piece on our flank
    route.segs.push_back(PlaneGraph::seg_of(cut));
    route.exit_face.push_back(m.face(c));
    route.entry_face.push_back(m.face(PlaneGraph::twin(cut)));
    int cont = m.next(cut);
    require_structure(m.edge_of_seg(PlaneGraph::seg_of(cont)) ==
                          m.edge_of_seg(PlaneGraph::seg_of(c)),
                      "crossing dummy without an alternating rotation");
    c = cont;
  }
  return c;
}

// The single dart of `edge` leaving its endpoint v.
int chain_start(const PlaneGraph& m, int v, int edge) {
  for (int d : m.darts_out(v))
    if (m.edge_of_seg(PlaneGraph::seg_of(d)) == edge) return d;
  throw structure_error("representative curve does not reach its endpoint");
}

bool has_duplicate_seg(const PlaneGraph::Route& r) {
  std::vector<int> segs = r.segs;
  std::sort(segs.begin(), segs.end());
  return std::adjacent_find(segs.begin(), segs.end()) != segs.end();
}

// A composed route is only known to stay a simple arc when no face hosts two
// separate visits (fan and flank chords are ears around their own corner or
// chain piece, but a dual-path section may land anywhere in a face, and two
// chords through one face can interleave into a non-planar gluing).
bool has_repeated_visit(const PlaneGraph::Route& r) {
  std::vector<int> faces;
  faces.reserve(r.entry_face.size() + 1);
  faces.push_back(r.source_face);
  faces.insert(faces.end(), r.entry_face.begin(), r.entry_face.end());
  std::sort(faces.begin(), faces.end());
  return std::adjacent_find(faces.begin(), faces.end()) != faces.end();
}

// Crossing a piece whose two sides are the same face (the tail of a curve
// toward a degree-1 vertex) cannot be threaded by face labels.
bool has_two_sided_crossing(const PlaneGraph::Route& r) {
  for (std::size_t i = 0; i < r.segs.size(); ++i)
    if (r.exit_face[i] == r.entry_face[i]) return true;
  return false;
}

}  // namespace

std::pair<Drawing, TransferTrace> transfer_drawing(const WeightedGraph& g1,
                                                   const Drawing& d1,
                                                   const WeightedGraph& g2,
                                                   const VertexPartition& clusters,
                                                   std::uint64_t seed) {
  const int n = g1.vertex_count();
  require(g2.vertex_count() == n, "transfer needs graphs on the same vertex set");
  require(d1.graph().vertex_count() == n && d1.graph().edge_count() == g1.edge_count(),
          "source drawing does not draw the first graph");
  for (int e = 0; e < g1.edge_count(); ++e)
    require(d1.graph().edges()[std::size_t(e)].u == g1.edges()[std::size_t(e)].u &&
                d1.graph().edges()[std::size_t(e)].v == g1.edges()[std::size_t(e)].v,
            "source drawing does not draw the first graph");
  require(clusters.vertex_count() == n, "cluster partition does not cover the vertex set");
  d1.validate(true);
  require(d1.is_simple(), "transfer needs a simple source drawing");

  const int k = clusters.class_count();
  const int m1 = g1.edge_count();
  const int m2 = g2.edge_count();

  TransferTrace tr;
  tr.representative.assign(std::size_t(m2), -1);

  // closeness threshold for the lonely test: exhaustive witness while the
  // Gray-code scan is cheap, heuristic lower bound beyond that (fewer lonely
  // pairs, which only makes the construction use more real representatives)
  if (n <= 20) {
    tr.closeness = cut_distance_exact(g1, g2, 20).value.approx;
    tr.closeness_exact = true;
  } else {
    tr.closeness = cut_distance_heuristic(g1, g2, 32, seed).value.approx;
    tr.closeness_exact = false;
  }
  const double lonely_cap = tr.closeness * double(n) * double(n) + 1e-12;

  // light-curve diagnostic on the source drawing
  tr.light_threshold = std::pow(tr.closeness, 0.125) * double(n) * double(n) / 16.0;
  for (int e = 0; e < m1; ++e)
    if (double(d1.crossing_list(e).size()) < tr.light_threshold) ++tr.light_edges;

  // weighted G1 aggregate and edge list per cluster pair
  std::vector<double> pair_weight(std::size_t(k) * std::size_t(k), 0.0);
  std::vector<std::vector<int>> pair_edges(std::size_t(k) * std::size_t(k));
  auto pair_key = [k](int i, int j) {
    if (i > j) std::swap(i, j);
    return std::size_t(i) * std::size_t(k) + std::size_t(j);
  };
  for (int e = 0; e < m1; ++e) {
    const WeightedGraph::Edge& ed = g1.edges()[std::size_t(e)];
    int i = clusters.class_of(ed.u), j = clusters.class_of(ed.v);
    if (i == j) continue;
    pair_weight[pair_key(i, j)] += ed.w.value();
    pair_edges[pair_key(i, j)].push_back(e);
  }

  // classify the G2 edges and pre-draw every representative, in edge order
  Rng rng = Rng::stream(seed, 0x7a15);
  std::vector<char> lonely_pair_seen(std::size_t(k) * std::size_t(k), 0);
  std::vector<char> is_lonely(std::size_t(m2), 0);
  for (int e = 0; e < m2; ++e) {
    const WeightedGraph::Edge& ed = g2.edges()[std::size_t(e)];
    int i = clusters.class_of(ed.u), j = clusters.class_of(ed.v);
    if (i == j) continue;  // short edge, routed directly
    std::size_t key = pair_key(i, j);
    if (pair_weight[key] <= lonely_cap) {
      is_lonely[std::size_t(e)] = 1;
      tr.lonely_edges.push_back(e);
      if (!lonely_pair_seen[key]) {
        lonely_pair_seen[key] = 1;
        tr.lonely_pairs.emplace_back(std::min(i, j), std::max(i, j));
      }
      continue;
    }
    // sample with probability proportional to the G1 edge weight
    double target = rng.u01() * pair_weight[key];
    double acc = 0.0;
    int pick = pair_edges[key].back();
    for (int e1 : pair_edges[key]) {
      acc += g1.edges()[std::size_t(e1)].w.value();
      if (acc >= target) {
        pick = e1;
        break;
      }
    }
    tr.representative[std::size_t(e)] = pick;
  }
  std::sort(tr.lonely_pairs.begin(), tr.lonely_pairs.end());

  // Working map: the blueprint drawing of G1, with G2 curves inserted under
  // shifted edge ids so both coexist.  Riders never cross their own
  // representative; everything that crossed it in d1 (and every rider that
  // crossed its chain earlier) shows up as a flank piece and is crossed once.
  PlaneGraph map = d1.map();
  for (int e = 0; e < m2; ++e) {
    if (is_lonely[std::size_t(e)]) continue;
    const WeightedGraph::Edge& ed = g2.edges()[std::size_t(e)];
    int i = clusters.class_of(ed.u), j = clusters.class_of(ed.v);
    int rep = tr.representative[std::size_t(e)];
    if (rep < 0) {  // short edge: plain cheapest dual path inside the cluster
      std::vector<std::int64_t> costs = rider_costs(map, g1, g2, clusters, i, j);
      PlaneGraph::Route r = map.route(ed.u, ed.v, costs);
      map.insert_routed(ed.u, ed.v, m1 + e, r);
      continue;
    }

    // orient the representative with its u'-side in the cluster of ed.u
    const WeightedGraph::Edge& re = g1.edges()[std::size_t(rep)];
    int ru = re.u, rv = re.v;
    if (clusters.class_of(ru) != i) std::swap(ru, rv);
    require(clusters.class_of(ru) == i && clusters.class_of(rv) == j,
            "representative outside its cluster pair");

    PlaneGraph::Route full;
    int c0 = chain_start(map, ru, rep);
    if (ed.u != ru) {
      std::vector<std::int64_t> costs = rider_costs(map, g1, g2, clusters, i, i);
      PlaneGraph::Route r1 = map.route(ed.u, ru, costs);
      full = r1;
      cross_fan(map, ru, r1.target_face, c0, full);
    } else {
      full.source_face = map.face(c0);
    }
    int c_end = ride_chain(map, c0, full);
    if (ed.v != rv) {
      std::vector<std::int64_t> costs = rider_costs(map, g1, g2, clusters, j, j);
      PlaneGraph::Route r2 = map.route(rv, ed.v, costs);
      // leave the corridor: rotate from the arrival corner to the corner the
      // outgoing route departs from (its source face), then follow it
      std::vector<int> ds = map.darts_out(rv);
      int depart = -1;
      for (int dd : ds)
        if (map.face(dd) == r2.source_face) {
          depart = dd;
          break;
        }
      require_structure(depart >= 0, "outgoing route does not start at a corner");
      cross_fan(map, rv, map.face(c_end), depart, full);
      splice_route(full, r2);
      full.target_face = r2.target_face;
    } else {
      full.target_face = map.face(c_end);
    }
    full.hops = int(full.segs.size());
    full.cost = full.hops;

    bool composed = ed.u != ru || ed.v != rv;
    if (has_duplicate_seg(full) || has_two_sided_crossing(full) ||
        (composed && has_repeated_visit(full))) {
      // the composition folded back on itself; fall back to a plain reroute,
      // which the dual search guarantees to be a simple arc
      std::vector<std::int64_t> costs = rider_costs(map, g1, g2, clusters, i, j);
      full = map.route(ed.u, ed.v, costs);
      tr.representative[std::size_t(e)] = -1;
      ++tr.rerouted;
    }
#ifdef CROSSKIT_TRANSFER_DEBUG
    if (const char* de = std::getenv("CROSSKIT_TRANSFER_DUMP_EDGE");
        de && std::stoi(de) == e) {
      std::fprintf(stderr, "edge %d (%d,%d) rep %d src %d tgt %d\n", e, ed.u, ed.v,
                   tr.representative[std::size_t(e)], full.source_face, full.target_face);
      for (std::size_t t = 0; t < full.segs.size(); ++t) {
        int s = full.segs[t];
        std::fprintf(stderr, "  cross seg %d (edge %d, %d-%d) exit %d entry %d\n", s,
                     map.edge_of_seg(s), map.from(2 * s), map.to(2 * s),
                     full.exit_face[t], full.entry_face[t]);
      }
    }
#endif
    map.insert_routed(ed.u, ed.v, m1 + e, full);
#ifdef CROSSKIT_TRANSFER_DEBUG
    try {
      map.validate();
    } catch (const std::exception& ex) {
      throw structure_error("after rider for g2 edge " + std::to_string(e) + " (" +
                            std::to_string(ed.u) + "," + std::to_string(ed.v) + ") rep " +
                            std::to_string(tr.representative[std::size_t(e)]) + ": " +
                            ex.what());
    }
#endif
  }

#ifdef CROSSKIT_TRANSFER_DEBUG
  std::fprintf(stderr, "[transfer] risers done\n");
#endif
  // drop the blueprint; crossings through it smooth away, rider-vs-rider
  // crossings (one per blueprint crossing of their representatives) remain
  for (int e = 0; e < m1; ++e) map.remove_edge_chain(e);
  for (int s = 0; s < map.dart_limit() / 2; ++s)
    if (map.dart_alive(2 * s) && map.edge_of_seg(s) >= 0)
      map.set_seg_edge(s, map.edge_of_seg(s) - m1);

  Drawing out(g2, std::move(map));
  for (const std::string& op : d1.ops()) out.log(op);
  out.log("transfer: " + std::to_string(m2 - int(tr.lonely_edges.size())) +
          " curves ridden or routed, " + std::to_string(tr.lonely_edges.size()) +
          " lonely reinserted, closeness " + std::to_string(tr.closeness));
  out.validate(false);

#ifdef CROSSKIT_TRANSFER_DEBUG
  std::fprintf(stderr, "[transfer] blueprint removed, drawing valid\n");
#endif
  // make the transfer simple and locally optimal, then give the lonely edges
  // their optimal curves through the settled drawing
  out = refine_locally_optimal(std::move(out));
#ifdef CROSSKIT_TRANSFER_DEBUG
  std::fprintf(stderr, "[transfer] refined\n");
#endif
  for (int e : tr.lonely_edges) out = insert_edge_optimally(out, e);
  out.validate(true);

  // crossing breakdown of what survived
  const PlaneGraph& final_map = out.map();
  for (int v = 0; v < final_map.node_count(); ++v) {
    if (!final_map.node_alive(v) || !final_map.is_dummy(v)) continue;
    auto [e, f] = out.crossing_at(v);
    if (is_lonely[std::size_t(e)] || is_lonely[std::size_t(f)]) {
      ++tr.lonely_crossings;
      continue;
    }
    const WeightedGraph::Edge& ee = g2.edges()[std::size_t(e)];
    const WeightedGraph::Edge& ff = g2.edges()[std::size_t(f)];
    int a1 = clusters.class_of(ee.u), a2 = clusters.class_of(ee.v);
    int b1 = clusters.class_of(ff.u), b2 = clusters.class_of(ff.v);
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) {
      ++tr.bad;
      continue;
    }
    int longs = int(a1 != a2) + int(b1 != b2);
    if (longs == 2)
      ++tr.good_long_long;
    else if (longs == 1)
      ++tr.good_long_short;
    else
      ++tr.good_short_short;
  }

  return {std::move(out), std::move(tr)};
}

}  // namespace crosskit
