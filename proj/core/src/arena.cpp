#include "crosskit/arena.hpp"

#include <algorithm>
#include <vector>

#include "crosskit/util.hpp"

namespace crosskit {

namespace {

bool adjacent_nodes(const PlaneGraph& m, int a, int b) {
  for (int d : m.darts_out(a))
    if (m.to(d) == b) return true;
  return false;
}

// live face ids with orbit sizes, gathered without touching stale labels
struct FaceScan {
  std::vector<int> ids;    // sorted
  std::vector<int> sizes;  // parallel to ids
};

FaceScan scan_faces(const PlaneGraph& m) {
  std::vector<int> size_by_id(m.face_id_limit(), 0);
  for (int d = 0; d < m.dart_limit(); ++d)
    if (m.dart_alive(d)) ++size_by_id[m.face(d)];
  FaceScan out;
  for (int f = 0; f < m.face_id_limit(); ++f)
    if (size_by_id[f] > 0) {
      out.ids.push_back(f);
      out.sizes.push_back(size_by_id[f]);
    }
  return out;
}

// triangulate one face by ear clipping; faces created by the chords are
// final, so only the shrinking remainder walk is tracked.  Chords between
// two scaffold nodes are preferred, keeping graph vertices as lightly
// connected as the face allows.
void clip_face(PlaneGraph& m, int f) {
  std::vector<int> walk = m.face_darts(f);
  std::size_t cursor = 0;
  for (;;) {
    std::size_t k = walk.size();
    if (k == 3) {
      int a = m.from(walk[0]), b = m.from(walk[1]), c = m.from(walk[2]);
      if (a != b && a != c && b != c) return;
    }
    int ear = -1;
    if (k > 3) {
      for (int pass = 0; pass < 2 && ear < 0; ++pass) {
        for (std::size_t off = 0; off < k && ear < 0; ++off) {
          std::size_t i = (cursor + off) % k;
          int a = m.from(walk[i]);
          int c = m.from(walk[(i + 2) % k]);
          if (a == c || adjacent_nodes(m, a, c)) continue;
          if (pass == 0 && !(m.is_dummy(a) && m.is_dummy(c))) continue;
          ear = int(i);
        }
      }
    }
    if (ear < 0) {
      // repeated corners (or a fully chorded walk): an apex always works
      m.star_face(m.face(walk[0]));
      return;
    }
    std::size_t i = std::size_t(ear);
    int p = m.add_chord(walk[i], walk[(i + 2) % k], PlaneGraph::kNoEdge);
    std::vector<int> rest;
    rest.reserve(k - 1);
    rest.push_back(p);
    for (std::size_t off = 2; off < k; ++off)
      rest.push_back(walk[(i + off) % k]);
    walk.swap(rest);
    cursor = 1;  // resume just past the chord: spreads chords around the walk
  }
}

}  // namespace

void triangulate_faces(PlaneGraph& m) {
  FaceScan fs = scan_faces(m);
  for (int f : fs.ids) clip_face(m, f);
}

int bridge_components(PlaneGraph& m) {
  int bridges = 0;
  for (;;) {
    std::vector<int> comp = m.components();
    int root = -1;
    for (int v = 0; v < m.node_count(); ++v)
      if (m.node_alive(v)) {
        root = comp[v];
        break;
      }
    if (root < 0) return bridges;
    int u = -1;  // smallest live node outside the root component
    for (int v = 0; v < m.node_count() && u < 0; ++v)
      if (m.node_alive(v) && comp[v] != root) u = v;
    if (u < 0) return bridges;

    // host face: largest face of the root component, ties to the lowest id
    FaceScan fs = scan_faces(m);
    int host = -1, host_size = 0;
    for (std::size_t i = 0; i < fs.ids.size(); ++i) {
      int f = fs.ids[i];
      if (comp[m.from(m.any_dart_of_face(f))] != root) continue;
      if (fs.sizes[i] > host_size) {
        host = f;
        host_size = fs.sizes[i];
      }
    }
    int v = -1;
    if (host >= 0) {
      for (int d : m.face_darts(host)) v = v < 0 ? m.from(d) : std::min(v, m.from(d));
    } else {
      for (int w = 0; w < m.node_count() && v < 0; ++w)
        if (m.node_alive(w) && comp[w] == root) v = w;
    }
    std::vector<int> fu = m.faces_at(u);
    PlaneGraph::Route r;
    r.source_face = fu.empty() ? -1 : fu.front();
    r.target_face = host;
    m.insert_routed(u, v, PlaneGraph::kNoEdge, r);
    ++bridges;
  }
}

PlaneGraph triangulate_planarization(const Drawing& d) {
  PlaneGraph m = d.map();
  int live = 0;
  for (int v = 0; v < m.node_count(); ++v)
    if (m.node_alive(v)) ++live;
  require(live >= 3, "triangulation needs at least three nodes");
  bridge_components(m);
  triangulate_faces(m);
  return m;
}

}  // namespace crosskit
