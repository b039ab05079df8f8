#include "crosskit/regions.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "crosskit/arena.hpp"
#include "crosskit/separator.hpp"
#include "crosskit/util.hpp"

namespace crosskit {

namespace {

std::vector<int> live_faces(const PlaneGraph& m) {
  std::vector<char> seen(m.face_id_limit(), 0);
  std::vector<int> out;
  for (int d = 0; d < m.dart_limit(); ++d) {
    if (!m.dart_alive(d)) continue;
    int f = m.face(d);
    if (!seen[f]) {
      seen[f] = 1;
      out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The chart: triangulated planarization, refined so that every face touches
// at most one graph vertex and every graph vertex sits behind a ring of
// scaffold mid-nodes.  Four passes: split vertex-vertex segments, star the
// faces still touching two vertices, split every vertex-scaffold segment,
// re-triangulate.
PlaneGraph build_chart(const Drawing& d) {
  PlaneGraph m = triangulate_planarization(d);

  std::vector<int> targets;
  for (int s = 0; s < m.dart_limit() / 2; ++s)
    if (m.seg_alive(s) && !m.is_dummy(m.from(2 * s)) && !m.is_dummy(m.to(2 * s)))
      targets.push_back(s);
  for (int s : targets) m.subdivide(s);

  for (int f : live_faces(m)) {
    int corners = 0;
    for (int dd : m.face_darts(f))
      if (!m.is_dummy(m.from(dd))) ++corners;
    if (corners >= 2) m.star_face(f);
  }

  targets.clear();
  for (int s = 0; s < m.dart_limit() / 2; ++s)
    if (m.seg_alive(s) && m.is_dummy(m.from(2 * s)) != m.is_dummy(m.to(2 * s)))
      targets.push_back(s);
  for (int s : targets) m.subdivide(s);

  triangulate_faces(m);

  // the recursion leans on both properties; audit them here
  for (int f : live_faces(m)) {
    int corners = 0;
    for (int dd : m.face_darts(f))
      if (!m.is_dummy(m.from(dd))) ++corners;
    require_structure(corners <= 1, "chart face touching two graph vertices");
  }
  return m;
}

struct Reg {
  std::vector<int> faces;
  std::vector<int> verts;
};

// Split r along a balanced separator of the chart.  Weights sit only on r's
// vertices, so both sides keep at most ~2/3 of them; vertices on the cycle
// are pulled, disk and all, to the currently lighter side.  Children are the
// connected components of the two sides.
std::vector<Reg> split_region(const PlaneGraph& m, const Reg& r) {
  int nr = int(r.verts.size());
  std::vector<double> w(m.node_count(), 0.0);
  for (int v : r.verts) w[v] = 1.0 / nr;
  CycleCut cut = cycle_separator(m, w);

  std::vector<char> on_cycle(m.node_count(), 0);
  for (int v : cut.nodes) on_cycle[v] = 1;

  int cnt_in = 0, cnt_out = 0;
  std::vector<int> strand;  // r's vertices sitting on the cycle
  for (int v : r.verts) {
    if (on_cycle[v])
      strand.push_back(v);
    else
      (cut.face_inside[m.faces_at(v).front()] ? cnt_in : cnt_out) += 1;
  }

  // st by face id: 0 = outside r, 1 = r's outer side, 2 = r's inner side
  std::vector<char> st(m.face_id_limit(), 0);
  for (int f : r.faces) st[f] = cut.face_inside[f] ? 2 : 1;
  for (int v : strand) {
    bool inside = cnt_in <= cnt_out;  // ties toward the interior
    (inside ? cnt_in : cnt_out) += 1;
    for (int f : m.faces_at(v)) st[f] = inside ? 2 : 1;
  }
  if (cnt_in == 0 || cnt_out == 0) {
    // separator failed to split r's vertices: peel off one disk instead
    for (int f : r.faces) st[f] = 1;
    for (int f : m.faces_at(r.verts.front())) st[f] = 2;
  }

  std::vector<Reg> out;
  std::vector<int> owner(m.face_id_limit(), -1);
  std::vector<int> queue;
  for (int f0 : r.faces) {
    if (owner[f0] >= 0) continue;
    int id = int(out.size());
    out.emplace_back();
    owner[f0] = id;
    queue.assign(1, f0);
    while (!queue.empty()) {
      int f = queue.back();
      queue.pop_back();
      out[id].faces.push_back(f);
      for (int dd : m.face_darts(f)) {
        int g = m.face(PlaneGraph::twin(dd));
        if (owner[g] < 0 && st[g] == st[f]) {
          owner[g] = id;
          queue.push_back(g);
        }
      }
    }
  }
  for (int v : r.verts) out[owner[m.faces_at(v).front()]].verts.push_back(v);
  return out;
}

}  // namespace

RegionSubdivision subdivide_regions(const Drawing& d, double eps) {
  require(eps > 0.0 && eps <= 1.0, "eps must lie in (0, 1]");
  const int n = d.graph().vertex_count();

  RegionSubdivision out;
  out.epsilon = eps;
  out.cap = int(std::ceil(eps * eps * double(n)));

  int live = 0;
  for (int v = 0; v < d.map().node_count(); ++v)
    if (d.map().node_alive(v)) ++live;
  if (live < 3) {
    // too small to triangulate: everything is one region
    out.chart = d.map();
    Reg all;
    all.faces = live_faces(out.chart);
    for (int v = 0; v < n; ++v) all.verts.push_back(v);
    out.region_faces.push_back(all.faces);
    out.region_vertices.push_back(all.verts);
    out.vertex_region.assign(n, 0);
    return out;
  }

  out.chart = build_chart(d);
  const PlaneGraph& m = out.chart;
  std::vector<int> world = live_faces(m);

  std::vector<Reg> finals;
  if (n > 0 && eps * eps * double(n) <= 1.0 + 1e-9) {
    // trivial subdivision: one insulated disk per vertex, plus the rest
    std::vector<char> taken(m.face_id_limit(), 0);
    for (int v = 0; v < n; ++v) {
      Reg r;
      r.verts.assign(1, v);
      r.faces = m.faces_at(v);
      for (int f : r.faces) {
        require_structure(!taken[f], "vertex disks overlap");
        taken[f] = 1;
      }
      finals.push_back(std::move(r));
    }
    Reg rest;
    for (int f : world)
      if (!taken[f]) rest.faces.push_back(f);
    require_structure(!rest.faces.empty(), "no faces left outside the vertex disks");
    finals.push_back(std::move(rest));
  } else {
    std::vector<Reg> stack;
    Reg all;
    all.faces = world;
    for (int v = 0; v < n; ++v) all.verts.push_back(v);
    stack.push_back(std::move(all));
    while (!stack.empty()) {
      Reg r = std::move(stack.back());
      stack.pop_back();
      if (int(r.verts.size()) <= out.cap) {
        finals.push_back(std::move(r));
        continue;
      }
      for (Reg& c : split_region(m, r)) stack.push_back(std::move(c));
    }

    // dissolve vertex-free fragments into a neighboring region
    std::vector<int> owner(m.face_id_limit(), -1);
    for (std::size_t i = 0; i < finals.size(); ++i)
      for (int f : finals[i].faces) owner[f] = int(i);
    std::vector<char> alive(finals.size(), 1);
    int alive_count = int(finals.size());
    for (;;) {
      int victim = -1;
      for (std::size_t i = 0; i < finals.size() && victim < 0; ++i)
        if (alive[i] && finals[i].verts.empty() && alive_count > 1) victim = int(i);
      if (victim < 0) break;
      int target = -1;
      for (int f : finals[victim].faces)
        for (int dd : m.face_darts(f)) {
          int o = owner[m.face(PlaneGraph::twin(dd))];
          if (o != victim && (target < 0 || o < target)) target = o;
        }
      require_structure(target >= 0, "fragment with no neighboring region");
      for (int f : finals[victim].faces) {
        owner[f] = target;
        finals[target].faces.push_back(f);
      }
      finals[victim].faces.clear();
      alive[victim] = 0;
      --alive_count;
    }
    std::vector<Reg> kept;
    for (std::size_t i = 0; i < finals.size(); ++i)
      if (alive[i]) kept.push_back(std::move(finals[i]));
    finals.swap(kept);
  }

  for (Reg& r : finals) {
    std::sort(r.faces.begin(), r.faces.end());
    std::sort(r.verts.begin(), r.verts.end());
  }
  std::sort(finals.begin(), finals.end(), [](const Reg& a, const Reg& b) {
    return a.faces.front() < b.faces.front();
  });

  out.vertex_region.assign(n, -1);
  std::vector<int> owner(m.face_id_limit(), -1);
  for (std::size_t i = 0; i < finals.size(); ++i) {
    for (int f : finals[i].faces) owner[f] = int(i);
    for (int v : finals[i].verts) out.vertex_region[v] = int(i);
    out.region_faces.push_back(std::move(finals[i].faces));
    out.region_vertices.push_back(std::move(finals[i].verts));
  }
  for (int v = 0; v < n; ++v)
    require_structure(out.vertex_region[v] >= 0, "vertex missing from all regions");

  for (int s = 0; s < m.dart_limit() / 2; ++s) {
    if (!m.seg_alive(s) || m.edge_of_seg(s) < 0) continue;
    if (owner[m.face(2 * s)] != owner[m.face(2 * s + 1)]) ++out.boundary_incidences;
  }
  return out;
}

std::vector<int> region_boundary_segs(const RegionSubdivision& s, int r) {
  require(r >= 0 && r < int(s.region_faces.size()), "region index out of range");
  std::vector<char> mine(s.chart.face_id_limit(), 0);
  for (int f : s.region_faces[r]) mine[f] = 1;
  std::vector<int> out;
  for (int seg = 0; seg < s.chart.dart_limit() / 2; ++seg) {
    if (!s.chart.seg_alive(seg)) continue;
    if (mine[s.chart.face(2 * seg)] != mine[s.chart.face(2 * seg + 1)])
      out.push_back(seg);
  }
  return out;
}

}  // namespace crosskit
