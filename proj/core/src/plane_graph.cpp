#include "crosskit/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

namespace crosskit {

// --- small internals ------------------------------------------------------

int PlaneGraph::new_dart_pair() {
  if (!free_darts_.empty()) {
    int d = free_darts_.back();
    free_darts_.pop_back();
    return d;
  }
  int d = int(dart_from_.size());
  dart_from_.insert(dart_from_.end(), {-1, -1});
  dart_next_.insert(dart_next_.end(), {-1, -1});
  dart_prev_.insert(dart_prev_.end(), {-1, -1});
  dart_face_.insert(dart_face_.end(), {-1, -1});
  seg_edge_.push_back(kNoEdge);
  return d;
}

void PlaneGraph::kill_dart_pair(int d) {
  d &= ~1;
  for (int k : {d, d + 1}) {
    dart_from_[k] = -1;
    dart_next_[k] = dart_prev_[k] = dart_face_[k] = -1;
  }
  seg_edge_[d >> 1] = kNoEdge;
  free_darts_.push_back(d);
}

void PlaneGraph::kill_node(int v) {
  node_alive_[v] = 0;
  if (!node_dummy_[v]) --graph_vertices_;
  first_dart_[v] = -1;
}

int PlaneGraph::fresh_face() {
  face_dart_.push_back(-1);
  return face_limit_++;
}

void PlaneGraph::splice_before(int d, int at) {
  int p = dart_prev_[at];
  dart_next_[p] = d;
  dart_prev_[d] = p;
  dart_next_[d] = at;
  dart_prev_[at] = d;
}

void PlaneGraph::splice_single(int d) {
  dart_next_[d] = dart_prev_[d] = d;
  first_dart_[dart_from_[d]] = d;
}

void PlaneGraph::unsplice(int d) {
  int v = dart_from_[d];
  if (dart_next_[d] == d) {
    first_dart_[v] = -1;
    return;
  }
  int n = dart_next_[d], p = dart_prev_[d];
  dart_next_[p] = n;
  dart_prev_[n] = p;
  if (first_dart_[v] == d) first_dart_[v] = n;
}

int PlaneGraph::add_node_with_comp(bool dummy, int comp) {
  node_alive_.push_back(1);
  node_dummy_.push_back(dummy ? 1 : 0);
  first_dart_.push_back(-1);
  if (!dummy) ++graph_vertices_;
  if (comp_count_ >= 0) {
    if (comp < 0) {
      comp = next_comp_id_++;
      ++comp_count_;
    }
    comp_cache_.push_back(comp);
  }
  return int(node_alive_.size()) - 1;
}

int PlaneGraph::add_node(bool dummy) { return add_node_with_comp(dummy, -1); }

void PlaneGraph::ensure_components() const {
  if (comp_count_ >= 0) return;
  comp_cache_.assign(node_count(), -1);
  bfs_scratch_.clear();
  int c = 0;
  for (int v = 0; v < node_count(); ++v) {
    if (!node_alive_[v] || comp_cache_[v] >= 0) continue;
    comp_cache_[v] = c;
    bfs_scratch_.push_back(v);
    while (!bfs_scratch_.empty()) {
      int x = bfs_scratch_.back();
      bfs_scratch_.pop_back();
      int d0 = first_dart_[x];
      if (d0 < 0) continue;
      int d = d0;
      do {
        int y = dart_from_[d ^ 1];
        if (comp_cache_[y] < 0) {
          comp_cache_[y] = c;
          bfs_scratch_.push_back(y);
        }
        d = dart_next_[d];
      } while (d != d0);
    }
    ++c;
  }
  comp_count_ = c;
  next_comp_id_ = c;
}

// --- construction ---------------------------------------------------------

PlaneGraph PlaneGraph::from_rotations(const std::vector<std::vector<Stub>>& rotations,
                                      int graph_vertices) {
  PlaneGraph g;
  int n = int(rotations.size());
  require(graph_vertices >= 0 && graph_vertices <= n, "bad graph vertex count");
  g.graph_vertices_ = graph_vertices;
  g.node_alive_.assign(n, 1);
  g.node_dummy_.assign(n, 0);
  for (int v = graph_vertices; v < n; ++v) g.node_dummy_[v] = 1;
  g.first_dart_.assign(n, -1);

  std::map<std::pair<int, int>, int> seg_of_pair;  // (min,max) -> even dart
  for (int v = 0; v < n; ++v) {
    int prev = -1, first = -1;
    for (const Stub& st : rotations[v]) {
      require(st.to >= 0 && st.to < n, "rotation neighbor out of range");
      require_structure(st.to != v, "loop segment in rotation system");
      auto key = std::minmax(v, st.to);
      int d;
      auto it = seg_of_pair.find({key.first, key.second});
      if (it == seg_of_pair.end()) {
        d = g.new_dart_pair();
        seg_of_pair[{key.first, key.second}] = d;
        g.seg_edge_[d >> 1] = st.edge;
        g.dart_from_[d] = v;  // first endpoint seen owns the even dart
      } else {
        d = it->second;
        require_structure(g.dart_from_[d] != v && g.dart_from_[d + 1] == -1,
                          "parallel segments in rotation system");
        require_structure(g.seg_edge_[d >> 1] == st.edge, "segment edge id mismatch");
        d = d + 1;
        g.dart_from_[d] = v;
      }
      if (prev < 0)
        first = d;
      else {
        g.dart_next_[prev] = d;
        g.dart_prev_[d] = prev;
      }
      prev = d;
    }
    if (first >= 0) {
      g.dart_next_[prev] = first;
      g.dart_prev_[first] = prev;
      g.first_dart_[v] = first;
    }
  }
  for (auto& [pair, d] : seg_of_pair)
    require_structure(g.dart_from_[d + 1] >= 0,
                      "segment " + std::to_string(pair.first) + "-" +
                          std::to_string(pair.second) + " listed on one side only");

  // trace every face orbit
  for (int d = 0; d < g.dart_limit(); ++d) {
    if (g.dart_from_[d] < 0 || g.dart_face_[d] >= 0) continue;
    int f = g.fresh_face();
    g.face_dart_[f] = d;
    int w = d;
    do {
      g.dart_face_[w] = f;
      w = g.phi(w);
    } while (w != d);
  }
  return g;
}

// --- inspection -----------------------------------------------------------

int PlaneGraph::degree(int v) const {
  int d = first_dart_[v];
  if (d < 0) return 0;
  int count = 0, w = d;
  do {
    ++count;
    w = dart_next_[w];
  } while (w != d);
  return count;
}

std::vector<int> PlaneGraph::darts_out(int v) const {
  std::vector<int> out;
  int d = first_dart_[v];
  if (d < 0) return out;
  int w = d;
  do {
    out.push_back(w);
    w = dart_next_[w];
  } while (w != d);
  return out;
}

int PlaneGraph::any_dart_of_face(int f) const {
  require_structure(f >= 0 && f < face_limit_, "face id out of range");
  int d = face_dart_[f];
  require_structure(d >= 0 && dart_from_[d] >= 0 && dart_face_[d] == f, "stale face id");
  return d;
}

std::vector<int> PlaneGraph::face_darts(int f) const {
  int d = any_dart_of_face(f);
  std::vector<int> out;
  int w = d;
  do {
    out.push_back(w);
    w = phi(w);
  } while (w != d);
  return out;
}

std::vector<int> PlaneGraph::faces_at(int v) const {
  std::vector<int> fs;
  for (int d : darts_out(v)) fs.push_back(dart_face_[d]);
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

int PlaneGraph::segment_count() const {
  int c = 0;
  for (int d = 0; d < dart_limit(); d += 2)
    if (dart_from_[d] >= 0) ++c;
  return c;
}

int PlaneGraph::face_count() const {
  std::vector<char> seen(face_limit_, 0);
  int c = 0;
  for (int d = 0; d < dart_limit(); ++d) {
    if (dart_from_[d] < 0) continue;
    if (!seen[dart_face_[d]]) {
      seen[dart_face_[d]] = 1;
      ++c;
    }
  }
  return c;
}

std::vector<int> PlaneGraph::chain_segs(int edge, int start) const {
  std::vector<int> out;
  int d0 = -1;  // the chain's dart at `start`
  for (int d : darts_out(start))
    if (seg_edge_[seg_of(d)] == edge) {
      require_structure(d0 < 0, "edge chain branches at its endpoint");
      d0 = d;
    }
  if (d0 < 0) return out;
  int d = d0;
  for (;;) {
    out.push_back(seg_of(d));
    int head = to(d);
    if (!is_dummy(head)) break;  // reached the far endpoint
    int cont = -1;  // continue along the same edge through the crossing
    for (int e : darts_out(head)) {
      if (e == twin(d)) continue;
      if (seg_edge_[seg_of(e)] == edge) {
        require_structure(cont < 0, "edge chain branches at a dummy");
        cont = e;
      }
    }
    require_structure(cont >= 0, "edge chain ends inside a dummy");
    d = cont;
  }
  return out;
}

std::vector<int> PlaneGraph::chain_dummies(int edge, int start) const {
  std::vector<int> out;
  auto segs = chain_segs(edge, start);
  int at = start;
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    int d = 2 * segs[i];
    at = (dart_from_[d] == at) ? to(d) : dart_from_[d];
    out.push_back(at);
  }
  return out;
}

std::vector<int> PlaneGraph::components() const {
  ensure_components();
  return comp_cache_;
}

void PlaneGraph::validate() const {
  for (int d = 0; d < dart_limit(); ++d) {
    if (dart_from_[d] < 0) continue;
    require_structure(dart_from_[twin(d)] >= 0, "half-dead dart pair");
    require_structure(node_alive_[dart_from_[d]], "dart from a dead node");
    require_structure(dart_next_[dart_prev_[d]] == d && dart_prev_[dart_next_[d]] == d,
                      "rotation links broken");
    require_structure(dart_from_[dart_next_[d]] == dart_from_[d], "rotation leaves node");
    require_structure(dart_face_[d] >= 0 && dart_face_[phi(d)] == dart_face_[d],
                      "face orbit inconsistent");
    require_structure(face_dart_[dart_face_[d]] >= 0 &&
                          dart_face_[face_dart_[dart_face_[d]]] == dart_face_[d],
                      "face representative astray");
  }
  for (int v = 0; v < node_count(); ++v) {
    if (!node_alive_[v]) continue;
    if (first_dart_[v] >= 0)
      require_structure(dart_from_[first_dart_[v]] == v, "first dart astray");
    if (is_dummy(v)) {
      // crossings carry 4 edge strands, chain points 2; scaffold segments
      // (chords, bridges) may raise the plain degree arbitrarily
      int strands = 0;
      for (int d : darts_out(v))
        if (seg_edge_[seg_of(d)] != kNoEdge) ++strands;
      require_structure(strands == 0 || strands == 2 || strands == 4,
                        "dummy with odd structure");
    }
  }
  // per-component Euler formula
  std::vector<int> comp = components();
  int cmax = next_comp_id_;
  if (cmax <= 0) return;
  std::vector<int> vcount(cmax, 0), ecount(cmax, 0), fcount(cmax, 0);
  for (int v = 0; v < node_count(); ++v)
    if (node_alive_[v]) ++vcount[comp[v]];
  std::vector<char> face_seen(face_limit_, 0);
  for (int d = 0; d < dart_limit(); ++d) {
    if (dart_from_[d] < 0) continue;
    int c = comp[dart_from_[d]];
    if (d % 2 == 0) ++ecount[c];
    int f = dart_face_[d];
    if (!face_seen[f]) {
      face_seen[f] = 1;
      ++fcount[c];
    }
  }
  for (int c = 0; c < cmax; ++c) {
    if (ecount[c] == 0) continue;  // isolated node
    require_structure(vcount[c] - ecount[c] + fcount[c] == 2,
                      "euler check failed: v=" + std::to_string(vcount[c]) +
                          " e=" + std::to_string(ecount[c]) +
                          " f=" + std::to_string(fcount[c]));
  }
}

// --- face repair ----------------------------------------------------------

void PlaneGraph::retrace_faces(const std::vector<int>& seed_darts) {
  // mark all alive seeds stale, then walk fresh orbits; every orbit must stay
  // inside the marked patch or the caller under-collected
  std::vector<int> alive;
  alive.reserve(seed_darts.size());
  for (int d : seed_darts)
    if (d >= 0 && d < dart_limit() && dart_from_[d] >= 0) alive.push_back(d);
  for (int d : alive) dart_face_[d] = -1;
  for (int d : alive) {
    if (dart_face_[d] >= 0) continue;
    int f = fresh_face();
    face_dart_[f] = d;
    int w = d;
    do {
      require_structure(dart_face_[w] == -1, "face repair escaped its patch");
      dart_face_[w] = f;
      w = phi(w);
    } while (w != d);
  }
}

// --- surgery --------------------------------------------------------------

int PlaneGraph::subdivide(int s) {
  require_structure(seg_alive(s), "subdividing a dead segment");
  int a = 2 * s;  // a: p -> q
  int b = a + 1;  // b: q -> p
  int q = dart_from_[b];
  int x = add_node_with_comp(true, comp_count_ >= 0 ? comp_cache_[q] : -1);
  int e = new_dart_pair();  // e: x -> q, e+1: q -> x
  seg_edge_[e >> 1] = seg_edge_[s];
  dart_from_[e] = x;
  dart_from_[e + 1] = q;
  // e+1 takes b's slot in q's rotation
  if (dart_next_[b] == b) {
    dart_next_[e + 1] = dart_prev_[e + 1] = e + 1;
    first_dart_[q] = e + 1;
  } else {
    int nb = dart_next_[b], pb = dart_prev_[b];
    dart_next_[e + 1] = nb;
    dart_prev_[nb] = e + 1;
    dart_prev_[e + 1] = pb;
    dart_next_[pb] = e + 1;
    if (first_dart_[q] == b) first_dart_[q] = e + 1;
  }
  // b becomes x -> p; rotation at x is [b, e]
  dart_from_[b] = x;
  dart_next_[b] = e;
  dart_prev_[b] = e;
  dart_next_[e] = b;
  dart_prev_[e] = b;
  first_dart_[x] = b;
  // faces carry over: p->x->q keeps face(a), the reverse side keeps face(b)
  dart_face_[e] = dart_face_[a];
  dart_face_[e + 1] = dart_face_[b];
  return x;
}

int PlaneGraph::add_chord(int at_a, int at_b, int edge) {
  require_structure(at_a >= 0 && at_a < dart_limit() && dart_alive(at_a) &&
                        at_b >= 0 && at_b < dart_limit() && dart_alive(at_b),
                    "chord corner dart is dead");
  require_structure(at_a != at_b, "chord needs two distinct corners");
  require_structure(dart_face_[at_a] == dart_face_[at_b],
                    "chord corners bound different faces");
  int a = dart_from_[at_a], b = dart_from_[at_b];
  require_structure(a != b, "chord would be a loop");
  std::vector<int> affected = face_darts(dart_face_[at_a]);
  int c = new_dart_pair();  // c: a -> b, c+1: b -> a
  seg_edge_[c >> 1] = edge;
  dart_from_[c] = a;
  dart_from_[c + 1] = b;
  splice_before(c, at_a);
  splice_before(c + 1, at_b);
  affected.push_back(c);
  affected.push_back(c + 1);
  retrace_faces(affected);
  return c;
}

int PlaneGraph::star_face(int f) {
  std::vector<int> walk = face_darts(f);  // checks that f is live
  int comp = comp_count_ >= 0 ? comp_cache_[dart_from_[walk[0]]] : -1;
  int apex = add_node_with_comp(true, comp);
  std::vector<int> affected = walk;
  // spokes are spliced before their corner darts; at the apex each new spoke
  // goes before the previous one, so the rotation runs the walk in reverse
  // and every corner closes into the triangle (apex, from(d), to(d))
  int prev_spoke = -1;
  for (int d : walk) {
    int s = new_dart_pair();  // s: apex -> from(d), s+1: from(d) -> apex
    dart_from_[s] = apex;
    dart_from_[s + 1] = dart_from_[d];
    splice_before(s + 1, d);
    if (prev_spoke < 0)
      splice_single(s);
    else
      splice_before(s, prev_spoke);
    prev_spoke = s;
    affected.push_back(s);
    affected.push_back(s + 1);
  }
  retrace_faces(affected);
  return apex;
}

// Merge the two segments behind darts a and b (both out of the same node,
// carrying one edge) into a single segment; a's pair survives, b's dies.
// Faces are untouched: a keeps its face, twin(a) keeps its own.
void PlaneGraph::bypass_pair(int a, int b) {
  require_structure(seg_edge_[seg_of(a)] == seg_edge_[seg_of(b)],
                    "merging segments of different edges");
  int q = to(b);
  int b1 = twin(b);   // q -> v
  dart_from_[a] = q;  // a becomes q -> p in b1's old slot
  if (dart_next_[b1] == b1) {
    dart_next_[a] = dart_prev_[a] = a;
    first_dart_[q] = a;
  } else {
    int nb = dart_next_[b1], pb = dart_prev_[b1];
    dart_next_[a] = nb;
    dart_prev_[nb] = a;
    dart_prev_[a] = pb;
    dart_next_[pb] = a;
    if (first_dart_[q] == b1) first_dart_[q] = a;
  }
  // flanking faces keep their ids; refresh representatives in case they
  // pointed into the dying pair
  face_dart_[dart_face_[a]] = a;
  face_dart_[dart_face_[twin(a)]] = twin(a);
  kill_dart_pair(b);
}

void PlaneGraph::smooth_degree2(int v) {
  require_structure(degree(v) == 2, "smoothing a node of degree != 2");
  int a = first_dart_[v];
  int b = dart_next_[a];
  bypass_pair(a, b);
  kill_node(v);
}

void PlaneGraph::smooth_touching(int v) {
  require_structure(is_dummy(v) && degree(v) == 4, "touching smoothing needs a dummy");
  std::vector<int> ds = darts_out(v);
  int x[4];
  for (int i = 0; i < 4; ++i) x[i] = seg_edge_[seg_of(ds[i])];
  // a touching has its two edges side by side in the rotation (any phase)
  int k = -1;
  for (int i = 0; i < 4 && k < 0; ++i)
    if (x[i] == x[(i + 1) % 4] && x[(i + 2) % 4] == x[(i + 3) % 4] && x[i] != x[(i + 2) % 4])
      k = i;
  require_structure(k >= 0, "rotation is alternating; this is a real crossing");
  std::vector<int> affected;
  for (int f : faces_at(v))
    for (int fd : face_darts(f)) affected.push_back(fd);
  bypass_pair(ds[std::size_t(k)], ds[std::size_t((k + 1) % 4)]);
  bypass_pair(ds[std::size_t((k + 2) % 4)], ds[std::size_t((k + 3) % 4)]);
  kill_node(v);
  retrace_faces(affected);
}

std::vector<int> PlaneGraph::insert_routed(int u, int v, int edge, const Route& r) {
  require(node_alive_[u] && node_alive_[v] && u != v, "bad insertion endpoints");
  // keep the component cache when everything stays inside one component
  if (comp_count_ >= 0) {
    bool same = comp_cache_[u] == comp_cache_[v];
    for (int s : r.segs)
      same = same && comp_cache_[dart_from_[2 * s]] == comp_cache_[u];
    if (!same) comp_count_ = -1;
  }

  // collect the darts of every face the chain will touch, before surgery
  std::vector<int> face_ids;
  face_ids.push_back(r.source_face);
  for (std::size_t i = 0; i < r.segs.size(); ++i) {
    face_ids.push_back(r.exit_face[i]);
    face_ids.push_back(r.entry_face[i]);
  }
  face_ids.push_back(r.target_face);
  std::sort(face_ids.begin(), face_ids.end());
  face_ids.erase(std::unique(face_ids.begin(), face_ids.end()), face_ids.end());
  std::vector<int> affected;
  for (int f : face_ids)
    if (f >= 0)
      for (int fd : face_darts(f)) affected.push_back(fd);

  // subdivide every crossed segment (face ids stay valid throughout); the
  // fresh half-segments join the retrace patch
  std::vector<int> dummies;
  for (int s : r.segs) {
    int x = subdivide(s);
    dummies.push_back(x);
    for (int d : darts_out(x)) {
      affected.push_back(d);
      affected.push_back(twin(d));
    }
  }

  // thread the chain: one chord per region visit, anchored at face corners
  auto corner = [&](int node, int f) -> int {
    int best = -1;  // smallest dart id out of `node` bounding face f
    for (int d : darts_out(node))
      if (dart_face_[d] == f && (best < 0 || d < best)) best = d;
    require_structure(best >= 0 || first_dart_[node] < 0, "chord corner not on its face");
    return best;
  };
  auto attach = [&](int d, int node, int f) {
    int at = (f >= 0) ? corner(node, f) : -1;
    if (at >= 0)
      splice_before(d, at);
    else if (first_dart_[node] < 0)
      splice_single(d);
    else
      splice_before(d, first_dart_[node]);  // floating endpoint: corner is free
  };
  int prev_node = u;
  int prev_face = r.source_face;
  std::vector<int> new_darts;
  for (std::size_t i = 0; i <= r.segs.size(); ++i) {
    bool last = i == r.segs.size();
    int next_node = last ? v : dummies[i];
    int enter_face = last ? r.target_face : r.exit_face[i];
    int c = new_dart_pair();
    seg_edge_[c >> 1] = edge;
    dart_from_[c] = prev_node;
    dart_from_[c + 1] = next_node;
    attach(c, prev_node, prev_face);
    attach(c + 1, next_node, enter_face);
    new_darts.push_back(c);
    new_darts.push_back(c + 1);
    prev_node = next_node;
    prev_face = last ? -1 : r.entry_face[i];
  }
  affected.insert(affected.end(), new_darts.begin(), new_darts.end());
  retrace_faces(affected);
  return dummies;
}

void PlaneGraph::remove_edge_chain(int edge) {
  // an endpoint of the chain carries exactly one strand of the edge
  int start = -1;
  for (int v = 0; v < node_count() && start < 0; ++v) {
    if (!node_alive_[v] || first_dart_[v] < 0) continue;
    int strands = 0;
    for (int d : darts_out(v))
      if (seg_edge_[seg_of(d)] == edge) ++strands;
    if (strands == 1) start = v;
  }
  if (start < 0) return;  // edge not drawn
  std::vector<int> segs = chain_segs(edge, start);
  std::vector<int> mids = chain_dummies(edge, start);
  int other = start;  // far endpoint, for the post-removal connectivity probe
  for (int s : segs) {
    int d = 2 * s;
    other = (dart_from_[d] == other) ? to(d) : dart_from_[d];
  }

  std::vector<int> fs;
  for (int s : segs) {
    fs.push_back(dart_face_[2 * s]);
    fs.push_back(dart_face_[2 * s + 1]);
  }
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  std::vector<int> affected;
  for (int f : fs)
    for (int fd : face_darts(f)) affected.push_back(fd);

  for (int s : segs) {
    unsplice(2 * s);
    unsplice(2 * s + 1);
    kill_dart_pair(2 * s);
  }
  for (int x : mids) {
    require_structure(degree(x) == 2, "crossing dummy left in a broken state");
    smooth_degree2(x);
  }
  retrace_faces(affected);
  // the chain may have been the only connection between its endpoints; if
  // they still share a face the component survived and the cache stays valid
  if (comp_count_ >= 0) {
    std::vector<int> fu = faces_at(start), fv = faces_at(other);
    bool common = false;
    for (int f : fu)
      common = common || std::binary_search(fv.begin(), fv.end(), f);
    if (!common) comp_count_ = -1;
  }
}

// --- dual routing ---------------------------------------------------------

void PlaneGraph::touch_face(int f) const {
  if (f_epoch_[f] == epoch_now_) return;
  f_epoch_[f] = epoch_now_;
  f_dist_[f] = 0;
  f_hops_[f] = 0;
  f_pface_[f] = -1;
  f_pseg_[f] = -1;
  f_src_[f] = -1;
  f_state_[f] = 0;
  f_targ_[f] = 0;
}

PlaneGraph::Route PlaneGraph::route(int u, int v,
                                    const std::vector<std::int64_t>& seg_cost) const {
  require(node_alive_[u] && node_alive_[v], "routing between dead nodes");
  require(u != v, "routing a loop");
  require(int(seg_cost.size()) * 2 >= dart_limit(), "segment cost table too short");

  ensure_components();
  if (++epoch_now_ == 0) {  // stamp wrapped: wipe and restart
    std::fill(f_epoch_.begin(), f_epoch_.end(), 0);
    epoch_now_ = 1;
  }
  if (int(f_epoch_.size()) < face_limit_) {
    f_epoch_.resize(face_limit_, 0);
    f_dist_.resize(face_limit_);
    f_hops_.resize(face_limit_);
    f_pface_.resize(face_limit_);
    f_pseg_.resize(face_limit_);
    f_src_.resize(face_limit_);
    f_state_.resize(face_limit_);
    f_targ_.resize(face_limit_);
  }

  // nesting policy: the largest face of each secondary component is unified
  // (zero cost, no crossing) with the largest face of the whole map
  std::vector<std::pair<int, int>> mate_links;
  int anchor = -1;  // the shared outer face when the map is disconnected
  if (comp_count_ != 1) {
    std::vector<int> face_size(face_limit_, 0), face_comp(face_limit_, -1);
    for (int d = 0; d < dart_limit(); ++d) {
      if (dart_from_[d] < 0) continue;
      ++face_size[dart_face_[d]];
      face_comp[dart_face_[d]] = comp_cache_[dart_from_[d]];
    }
    std::vector<int> best(next_comp_id_, -1);
    for (int f = 0; f < face_limit_; ++f) {
      if (face_size[f] == 0) continue;
      int c = face_comp[f];
      if (best[c] < 0 || face_size[f] > face_size[best[c]] ||
          (face_size[f] == face_size[best[c]] && f < best[c]))
        best[c] = f;
    }
    for (int c = 0; c < next_comp_id_; ++c) {
      if (best[c] < 0) continue;
      if (anchor < 0 || face_size[best[c]] > face_size[anchor] ||
          (face_size[best[c]] == face_size[anchor] && best[c] < anchor))
        anchor = best[c];
    }
    for (int c = 0; c < next_comp_id_; ++c)
      if (best[c] >= 0 && best[c] != anchor) mate_links.emplace_back(anchor, best[c]);
  }
  auto for_each_mate = [&](int f, auto&& fn) {
    for (auto& [a, b] : mate_links) {
      if (a == f) fn(b);
      if (b == f) fn(a);
    }
  };

  using Key = std::tuple<std::int64_t, int, int>;  // cost, crossings, face
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> pq;
  auto seed = [&](int f, int source_mark) {
    touch_face(f);
    if (f_state_[f] != 0) return;
    f_state_[f] = 1;
    f_src_[f] = source_mark;
    pq.emplace(0, 0, f);
  };

  std::vector<int> ufaces = faces_at(u);
  if (ufaces.empty()) {
    if (anchor < 0) return Route{};  // no darts anywhere: plain floating chord
    seed(anchor, -1);
  } else {
    for (int f : ufaces) seed(f, f);
  }

  std::vector<int> vfaces = faces_at(v);
  bool v_floating = vfaces.empty();
  for (int f : vfaces) {
    touch_face(f);
    f_targ_[f] = 1;
  }

  std::vector<int> done_faces;  // tracked only for a floating target
  int reached = -1;
  while (!pq.empty()) {
    auto [dist, hops, f] = pq.top();
    pq.pop();
    if (f_state_[f] == 2) continue;
    f_state_[f] = 2;
    f_dist_[f] = dist;
    f_hops_[f] = hops;
    if (v_floating) done_faces.push_back(f);
    if (f_targ_[f]) {
      reached = f;
      break;
    }
    for_each_mate(f, [&](int g) {
      touch_face(g);
      if (f_state_[g] == 2) return;
      if (f_state_[g] == 0 ||
          std::make_pair(dist, hops) < std::make_pair(f_dist_[g], f_hops_[g])) {
        f_state_[g] = 1;
        f_dist_[g] = dist;
        f_hops_[g] = hops;
        f_pface_[g] = f;
        f_pseg_[g] = -1;
        f_src_[g] = f_src_[f];
        pq.emplace(dist, hops, g);
      }
    });
    int d0 = any_dart_of_face(f);
    int w = d0;
    do {
      int s = seg_of(w);
      std::int64_t c = seg_cost[s];
      if (c >= 0) {
        int g = dart_face_[twin(w)];
        touch_face(g);
        std::int64_t nd = dist + c;
        int nh = hops + 1;
        if (f_state_[g] != 2 &&
            (f_state_[g] == 0 ||
             std::make_pair(nd, nh) < std::make_pair(f_dist_[g], f_hops_[g]))) {
          f_state_[g] = 1;
          f_dist_[g] = nd;
          f_hops_[g] = nh;
          f_pface_[g] = f;
          f_pseg_[g] = s;
          f_src_[g] = f_src_[f];
          pq.emplace(nd, nh, g);
        }
      }
      w = phi(w);
    } while (w != d0);
  }

  if (v_floating) {
    // v is isolated, so the insertion picks its face: the first finalized
    // face is cheapest under the (cost, crossings, id) order
    reached = done_faces.empty() ? -1 : done_faces.front();
  }
  if (reached < 0 && ufaces.empty() && vfaces.empty()) return Route{};
  require_structure(reached >= 0, "dual route not found");

  Route r;
  r.cost = f_dist_[reached];
  r.hops = f_hops_[reached];
  r.target_face = reached;
  r.source_face = f_src_[reached];  // -1 when u floats
  int f = reached;
  while (f_pface_[f] >= 0) {
    if (f_pseg_[f] >= 0) {  // a real crossing; float jumps only shift faces
      r.segs.push_back(f_pseg_[f]);
      r.exit_face.push_back(f_pface_[f]);
      r.entry_face.push_back(f);
    }
    f = f_pface_[f];
  }
  std::reverse(r.segs.begin(), r.segs.end());
  std::reverse(r.exit_face.begin(), r.exit_face.end());
  std::reverse(r.entry_face.begin(), r.entry_face.end());
  return r;
}

std::string PlaneGraph::debug_string() const {
  std::ostringstream out;
  out << "nodes:";
  for (int v = 0; v < node_count(); ++v) {
    if (!node_alive_[v]) continue;
    out << " " << v << "[";
    bool first = true;
    for (int d : darts_out(v)) {
      if (!first) out << ",";
      first = false;
      out << to(d) << (is_dummy(to(d)) ? "*" : "") << "/e" << seg_edge_[seg_of(d)] << "/f"
          << dart_face_[d];
    }
    out << "]";
  }
  return out.str();
}

}  // namespace crosskit
