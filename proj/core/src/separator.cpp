#include "crosskit/separator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "crosskit/util.hpp"

namespace crosskit {

namespace {

// scratch for one candidate evaluation, epoch-stamped so resets are O(1)
struct Scratch {
  std::vector<int> node_mark, seg_mark, face_mark, node_seen;
  std::vector<int> queue;
  int epoch = 0;

  explicit Scratch(const PlaneGraph& t)
      : node_mark(t.node_count(), 0),
        seg_mark(t.dart_limit() / 2, 0),
        face_mark(t.face_id_limit(), 0),
        node_seen(t.node_count(), 0) {}
};

struct Candidate {
  double heavy = 0;     // weight of the heavier side
  int length = 0;       // cycle length
  int seg = -1;         // closing segment
  double inside = 0, outside = 0;
};

// fundamental cycle of non-tree segment s: tree paths from both endpoints up
// to their lowest common ancestor, closed by s itself
void fundamental_cycle(const PlaneGraph& t, const std::vector<int>& parent,
                       const std::vector<int>& parent_seg, const std::vector<int>& depth,
                       int s, std::vector<int>* nodes, std::vector<int>* segs) {
  nodes->clear();
  segs->clear();
  segs->push_back(s);
  int a = t.from(2 * s), b = t.to(2 * s);
  std::vector<int> pb;
  while (depth[a] > depth[b]) {
    nodes->push_back(a);
    segs->push_back(parent_seg[a]);
    a = parent[a];
  }
  while (depth[b] > depth[a]) {
    pb.push_back(b);
    segs->push_back(parent_seg[b]);
    b = parent[b];
  }
  while (a != b) {
    nodes->push_back(a);
    segs->push_back(parent_seg[a]);
    a = parent[a];
    pb.push_back(b);
    segs->push_back(parent_seg[b]);
    b = parent[b];
  }
  nodes->push_back(a);  // the meeting node
  for (auto it = pb.rbegin(); it != pb.rend(); ++it) nodes->push_back(*it);
}

// flood the seed side of the cycle in the dual; returns the weight strictly
// on that side and optionally records the flooded faces
double flood_side(const PlaneGraph& t, const std::vector<double>& w, int seed_face,
                  Scratch& sc, std::vector<char>* faces_out) {
  double inside = 0;
  sc.queue.clear();
  sc.queue.push_back(seed_face);
  sc.face_mark[seed_face] = sc.epoch;
  for (std::size_t head = 0; head < sc.queue.size(); ++head) {
    int f = sc.queue[head];
    if (faces_out) (*faces_out)[f] = 1;
    int d0 = t.any_dart_of_face(f);
    int d = d0;
    do {
      int v = t.from(d);
      if (sc.node_mark[v] != sc.epoch && sc.node_seen[v] != sc.epoch) {
        sc.node_seen[v] = sc.epoch;
        inside += w[v];
      }
      if (sc.seg_mark[PlaneGraph::seg_of(d)] != sc.epoch) {
        int g = t.face(PlaneGraph::twin(d));
        if (sc.face_mark[g] != sc.epoch) {
          sc.face_mark[g] = sc.epoch;
          sc.queue.push_back(g);
        }
      }
      d = t.phi(d);
    } while (d != d0);
  }
  return inside;
}

}  // namespace

CycleCut cycle_separator(const PlaneGraph& t, const std::vector<double>& weights) {
  require(int(weights.size()) >= t.node_count(), "separator needs a weight per node");
  double total = 0;
  int live = 0, root = -1;
  for (int v = 0; v < t.node_count(); ++v) {
    if (!t.node_alive(v)) continue;
    ++live;
    total += weights[v];
    if (root < 0) root = v;
  }
  require(live >= 3, "separator needs at least three nodes");
  require(std::fabs(total - 1.0) <= 1e-9, "separator weights must sum to one");
  for (int d = 0; d < t.dart_limit(); ++d) {
    if (!t.dart_alive(d)) continue;
    require(t.phi(t.phi(t.phi(d))) == d, "separator input must be triangulated");
    require(t.from(d) != t.from(t.phi(d)) && t.from(d) != t.from(t.phi(t.phi(d))),
            "separator face with repeated corners");
  }

  // BFS tree
  std::vector<int> parent(t.node_count(), -1), parent_seg(t.node_count(), -1);
  std::vector<int> depth(t.node_count(), -1);
  std::vector<int> bfs{root};
  depth[root] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int v = bfs[head];
    for (int d : t.darts_out(v)) {
      int u = t.to(d);
      if (depth[u] >= 0) continue;
      depth[u] = depth[v] + 1;
      parent[u] = v;
      parent_seg[u] = PlaneGraph::seg_of(d);
      bfs.push_back(u);
    }
  }
  require(int(bfs.size()) == live, "separator input must be connected");

  std::vector<char> is_tree(t.dart_limit() / 2, 0);
  for (int v = 0; v < t.node_count(); ++v)
    if (parent_seg[v] >= 0) is_tree[parent_seg[v]] = 1;

  Scratch sc(t);
  std::vector<int> cyc_nodes, cyc_segs;
  Candidate best;
  bool have = false;
  for (int s = 0; s < t.dart_limit() / 2; ++s) {
    if (!t.seg_alive(s) || is_tree[s]) continue;
    fundamental_cycle(t, parent, parent_seg, depth, s, &cyc_nodes, &cyc_segs);
    ++sc.epoch;
    double on_cycle = 0;
    for (int v : cyc_nodes) {
      sc.node_mark[v] = sc.epoch;
      on_cycle += weights[v];
    }
    for (int cs : cyc_segs) sc.seg_mark[cs] = sc.epoch;
    double inside = flood_side(t, weights, t.face(2 * s), sc, nullptr);
    double outside = total - on_cycle - inside;
    Candidate cand;
    cand.heavy = std::max(inside, outside);
    cand.length = int(cyc_nodes.size());
    cand.seg = s;
    cand.inside = inside;
    cand.outside = outside;
    if (!have || cand.heavy < best.heavy - 1e-15 ||
        (std::fabs(cand.heavy - best.heavy) <= 1e-15 &&
         (cand.length < best.length || (cand.length == best.length && cand.seg < best.seg)))) {
      best = cand;
      have = true;
    }
  }
  require_structure(have, "triangulation without a non-tree segment");

  // re-run the winner to record its sides
  CycleCut out;
  fundamental_cycle(t, parent, parent_seg, depth, best.seg, &cyc_nodes, &cyc_segs);
  ++sc.epoch;
  for (int v : cyc_nodes) sc.node_mark[v] = sc.epoch;
  for (int cs : cyc_segs) sc.seg_mark[cs] = sc.epoch;
  out.face_inside.assign(t.face_id_limit(), 0);
  flood_side(t, weights, t.face(2 * best.seg), sc, &out.face_inside);
  out.nodes = cyc_nodes;
  out.inside = best.inside;
  out.outside = best.outside;
  out.balanced = best.heavy <= 2.0 / 3.0 + 1e-9;
  return out;
}

}  // namespace crosskit
