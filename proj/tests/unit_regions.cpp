#include "crosskit/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "crosskit/arena.hpp"
#include "crosskit/drawing.hpp"
#include "crosskit/exact_cr.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/planarity.hpp"
#include "crosskit/plane_graph.hpp"
#include "crosskit/separator.hpp"
#include "crosskit/util.hpp"
#include "crosskit/weight.hpp"
#include "doctest.h"

using crosskit::bridge_components;
using crosskit::complete_graph;
using crosskit::CycleCut;
using crosskit::cycle_separator;
using crosskit::domain_error;
using crosskit::Drawing;
using crosskit::Embedding;
using crosskit::PlaneGraph;
using crosskit::random_graph;
using crosskit::RegionSubdivision;
using crosskit::subdivide_regions;
using crosskit::triangulate_planarization;
using crosskit::Weight;
using crosskit::WeightedGraph;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

Drawing planar_drawing(const WeightedGraph& g) {
  Embedding emb = crosskit::planar_embedding(g.vertex_count(), edge_pairs(g));
  REQUIRE(emb.planar);
  WeightedGraph copy = g;
  return Drawing::from_rotations(std::move(copy), emb.rotations);
}

WeightedGraph cycle_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, Weight::one());
  return g;
}

WeightedGraph path_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, Weight::one());
  return g;
}

WeightedGraph octahedron() {
  WeightedGraph g(6);
  for (int v : {1, 2, 3, 4}) {
    g.add_edge(0, v, Weight::one());
    g.add_edge(v, 5, Weight::one());
  }
  g.add_edge(1, 2, Weight::one());
  g.add_edge(2, 3, Weight::one());
  g.add_edge(3, 4, Weight::one());
  g.add_edge(1, 4, Weight::one());
  return g;
}

WeightedGraph grid_graph(int rows, int cols) {
  WeightedGraph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1, Weight::one());
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c, Weight::one());
    }
  return g;
}

int live_seg_count(const PlaneGraph& m) {
  int k = 0;
  for (int s = 0; s < m.dart_limit() / 2; ++s)
    if (m.seg_alive(s)) ++k;
  return k;
}

int live_node_count(const PlaneGraph& m) {
  int k = 0;
  for (int v = 0; v < m.node_count(); ++v)
    if (m.node_alive(v)) ++k;
  return k;
}

std::vector<int> live_faces(const PlaneGraph& m) {
  std::set<int> seen;
  for (int d = 0; d < m.dart_limit(); ++d)
    if (m.dart_alive(d)) seen.insert(m.face(d));
  return std::vector<int>(seen.begin(), seen.end());
}

// every face a triangle with three distinct corners, map structurally sound,
// Euler formula satisfied
void audit_triangulation(const PlaneGraph& m) {
  m.validate();
  for (int d = 0; d < m.dart_limit(); ++d) {
    if (!m.dart_alive(d)) continue;
    REQUIRE(m.phi(m.phi(m.phi(d))) == d);
    int a = m.from(d), b = m.from(m.phi(d)), c = m.from(m.phi(m.phi(d)));
    REQUIRE(a != b);
    REQUIRE(a != c);
    REQUIRE(b != c);
  }
  int v = live_node_count(m), e = live_seg_count(m), f = int(live_faces(m).size());
  CHECK(v - e + f == 2);
}

bool nodes_adjacent(const PlaneGraph& m, int a, int b) {
  for (int d : m.darts_out(a))
    if (m.to(d) == b) return true;
  return false;
}

// independent audit of a separator cut: the cycle is simple and closed, face
// colors flip only across cycle segments, off-cycle nodes are one-sided, and
// the reported side weights match a recount
void audit_cut(const PlaneGraph& t, const std::vector<double>& w, const CycleCut& cut) {
  std::size_t k = cut.nodes.size();
  REQUIRE(k >= 3);
  std::set<int> uniq(cut.nodes.begin(), cut.nodes.end());
  REQUIRE(uniq.size() == k);
  std::set<std::pair<int, int>> hops;
  for (std::size_t i = 0; i < k; ++i) {
    int a = cut.nodes[i], b = cut.nodes[(i + 1) % k];
    REQUIRE(nodes_adjacent(t, a, b));
    hops.insert({std::min(a, b), std::max(a, b)});
  }
  for (int s = 0; s < t.dart_limit() / 2; ++s) {
    if (!t.seg_alive(s)) continue;
    bool flip = cut.face_inside[t.face(2 * s)] != cut.face_inside[t.face(2 * s + 1)];
    int a = t.from(2 * s), b = t.to(2 * s);
    if (flip) CHECK(hops.count({std::min(a, b), std::max(a, b)}) == 1);
  }
  double win = 0, wout = 0;
  for (int v = 0; v < t.node_count(); ++v) {
    if (!t.node_alive(v) || uniq.count(v)) continue;
    std::vector<int> fs = t.faces_at(v);
    REQUIRE(!fs.empty());
    char side = cut.face_inside[fs.front()];
    for (int f : fs) CHECK(cut.face_inside[f] == side);
    (side ? win : wout) += w[v];
  }
  CHECK(std::fabs(win - cut.inside) < 1e-12);
  CHECK(std::fabs(wout - cut.outside) < 1e-12);
  if (cut.balanced) {
    CHECK(cut.inside <= 2.0 / 3.0 + 1e-9);
    CHECK(cut.outside <= 2.0 / 3.0 + 1e-9);
  }
}

// oracle: fundamental cycles of a DFS tree (a different tree family than the
// implementation uses), sides computed by face flooding in test code
bool any_balanced_fundamental_cycle(const PlaneGraph& t, const std::vector<double>& w) {
  int root = -1;
  for (int v = 0; v < t.node_count() && root < 0; ++v)
    if (t.node_alive(v)) root = v;
  std::vector<int> parent(t.node_count(), -1), pseg(t.node_count(), -1);
  std::vector<int> depth(t.node_count(), -1);
  std::vector<int> order;
  // iterative DFS, rotation order
  std::vector<int> stk{root};
  depth[root] = 0;
  while (!stk.empty()) {
    int v = stk.back();
    stk.pop_back();
    order.push_back(v);
    for (int d : t.darts_out(v)) {
      int u = t.to(d);
      if (depth[u] >= 0) continue;
      depth[u] = depth[v] + 1;
      parent[u] = v;
      pseg[u] = PlaneGraph::seg_of(d);
      stk.push_back(u);
    }
  }
  std::set<int> tree;
  for (int v = 0; v < t.node_count(); ++v)
    if (pseg[v] >= 0) tree.insert(pseg[v]);
  double total = 0;
  for (int v = 0; v < t.node_count(); ++v)
    if (t.node_alive(v)) total += w[v];

  for (int s = 0; s < t.dart_limit() / 2; ++s) {
    if (!t.seg_alive(s) || tree.count(s)) continue;
    int a = t.from(2 * s), b = t.to(2 * s);
    std::set<int> cyc_nodes;
    std::set<int> cyc_segs{s};
    while (depth[a] > depth[b]) cyc_nodes.insert(a), cyc_segs.insert(pseg[a]), a = parent[a];
    while (depth[b] > depth[a]) cyc_nodes.insert(b), cyc_segs.insert(pseg[b]), b = parent[b];
    while (a != b) {
      cyc_nodes.insert(a), cyc_segs.insert(pseg[a]), a = parent[a];
      cyc_nodes.insert(b), cyc_segs.insert(pseg[b]), b = parent[b];
    }
    cyc_nodes.insert(a);
    // flood one side
    std::set<int> flooded;
    std::vector<int> queue{t.face(2 * s)};
    flooded.insert(t.face(2 * s));
    while (!queue.empty()) {
      int f = queue.back();
      queue.pop_back();
      int d0 = t.any_dart_of_face(f), d = d0;
      do {
        if (!cyc_segs.count(PlaneGraph::seg_of(d))) {
          int g = t.face(PlaneGraph::twin(d));
          if (!flooded.count(g)) flooded.insert(g), queue.push_back(g);
        }
        d = t.phi(d);
      } while (d != d0);
    }
    double win = 0, wcyc = 0;
    std::set<int> counted;
    for (int f : flooded) {
      int d0 = t.any_dart_of_face(f), d = d0;
      do {
        int v = t.from(d);
        if (!cyc_nodes.count(v) && !counted.count(v)) counted.insert(v), win += w[v];
        d = t.phi(d);
      } while (d != d0);
    }
    for (int v : cyc_nodes) wcyc += w[v];
    double wout = total - wcyc - win;
    if (win <= 2.0 / 3.0 + 1e-9 && wout <= 2.0 / 3.0 + 1e-9) return true;
  }
  return false;
}

std::vector<double> uniform_weights(const PlaneGraph& m) {
  int live = live_node_count(m);
  std::vector<double> w(m.node_count(), 0.0);
  for (int v = 0; v < m.node_count(); ++v)
    if (m.node_alive(v)) w[v] = 1.0 / live;
  return w;
}

// full structural audit of a subdivision: regions partition the chart's live
// faces, are connected, and satisfy invariants (I) and (II)
void audit_subdivision(const RegionSubdivision& s, int n) {
  const PlaneGraph& m = s.chart;
  std::vector<int> owner(std::max(1, m.face_id_limit()), -1);
  int covered = 0;
  for (std::size_t i = 0; i < s.region_faces.size(); ++i) {
    REQUIRE(!s.region_faces[i].empty());
    for (int f : s.region_faces[i]) {
      REQUIRE(owner[f] == -1);
      owner[f] = int(i);
      ++covered;
    }
  }
  CHECK(covered == int(live_faces(m).size()));

  // connectivity of each region under shared-segment adjacency
  for (const std::vector<int>& faces : s.region_faces) {
    std::set<int> mine(faces.begin(), faces.end());
    std::set<int> seen{faces.front()};
    std::vector<int> queue{faces.front()};
    while (!queue.empty()) {
      int f = queue.back();
      queue.pop_back();
      int d0 = m.any_dart_of_face(f), d = d0;
      do {
        int g = m.face(PlaneGraph::twin(d));
        if (mine.count(g) && !seen.count(g)) seen.insert(g), queue.push_back(g);
        d = m.phi(d);
      } while (d != d0);
    }
    CHECK(seen.size() == mine.size());
  }

  // invariant (I): a vertex's entire disk lies in its region
  REQUIRE(int(s.vertex_region.size()) == n);
  for (int v = 0; v < n; ++v) {
    int r = s.vertex_region[v];
    REQUIRE(r >= 0);
    REQUIRE(r < int(s.region_faces.size()));
    for (int f : m.faces_at(v)) CHECK(owner[f] == r);
    const std::vector<int>& verts = s.region_vertices[r];
    CHECK(std::binary_search(verts.begin(), verts.end(), v));
  }
  // invariant (II): vertex budget
  int assigned = 0;
  for (const std::vector<int>& verts : s.region_vertices) {
    CHECK(int(verts.size()) <= s.cap);
    assigned += int(verts.size());
  }
  CHECK(assigned == n);
}

Drawing refined_drawing(int n, double p, std::uint64_t seed) {
  WeightedGraph g = random_graph(n, p, seed);
  return crosskit::crossing_number_upper(g, 4, seed).drawing;
}

}  // namespace

TEST_CASE("chord and star surgery keep the map sound") {
  Drawing d = planar_drawing(cycle_graph(4));
  SUBCASE("a chord splits a square face into two triangles") {
    PlaneGraph m = d.map();
    int faces_before = int(live_faces(m).size());
    int f = m.face(0);
    std::vector<int> walk = m.face_darts(f);
    REQUIRE(walk.size() == 4);
    m.add_chord(walk[0], walk[2], PlaneGraph::kNoEdge);
    m.validate();
    CHECK(int(live_faces(m).size()) == faces_before + 1);
    for (int dd : {walk[0], walk[1], walk[2], walk[3]})
      CHECK(m.face_darts(m.face(dd)).size() == 3);
  }
  SUBCASE("a star fills a square face with four triangles") {
    PlaneGraph m = d.map();
    int f = m.face(0);
    int apex = m.star_face(f);
    m.validate();
    CHECK(m.is_dummy(apex));
    CHECK(m.degree(apex) == 4);
    for (int dd : m.darts_out(apex)) CHECK(m.face_darts(m.face(dd)).size() == 3);
  }
}

TEST_CASE("bridging ties disconnected pieces into one component") {
  WeightedGraph g(8);
  // triangle 0-1-2, segment 3-4, triangle 5-6-7; vertex ids stay grouped
  g.add_edge(0, 1, Weight::one());
  g.add_edge(1, 2, Weight::one());
  g.add_edge(0, 2, Weight::one());
  g.add_edge(3, 4, Weight::one());
  g.add_edge(5, 6, Weight::one());
  g.add_edge(6, 7, Weight::one());
  g.add_edge(5, 7, Weight::one());
  Drawing d = planar_drawing(g);
  PlaneGraph m = d.map();
  int segs = live_seg_count(m);
  int added = bridge_components(m);
  CHECK(added == 2);
  CHECK(live_seg_count(m) == segs + 2);
  m.validate();
  std::vector<int> comp = m.components();
  for (int v = 1; v < 8; ++v) CHECK(comp[v] == comp[0]);
  // bridges carry no edge
  int scaffold = 0;
  for (int s = 0; s < m.dart_limit() / 2; ++s)
    if (m.seg_alive(s) && m.edge_of_seg(s) == PlaneGraph::kNoEdge) ++scaffold;
  CHECK(scaffold == 2);
}

TEST_CASE("triangulating a plane K4 changes nothing") {
  Drawing d = planar_drawing(complete_graph(4));
  PlaneGraph t = triangulate_planarization(d);
  audit_triangulation(t);
  CHECK(live_seg_count(t) == 6);
  CHECK(live_node_count(t) == 4);
}

TEST_CASE("triangulating a square adds exactly the two chords") {
  Drawing d = planar_drawing(cycle_graph(4));
  PlaneGraph t = triangulate_planarization(d);
  audit_triangulation(t);
  CHECK(live_node_count(t) == 4);  // no apex needed
  CHECK(live_seg_count(t) == 6);   // 4 sides + 2 chords
  CHECK(int(live_faces(t).size()) == 4);
}

TEST_CASE("triangulating the optimal K5 planarization") {
  Drawing d = crosskit::crossing_number_exact(complete_graph(5)).drawing;
  PlaneGraph t = triangulate_planarization(d);
  audit_triangulation(t);
  int v = live_node_count(t);
  CHECK(v == 6);  // 5 vertices + 1 crossing, no apexes
  CHECK(int(live_faces(t).size()) == 2 * v - 4);
}

TEST_CASE("triangulation handles trees, paths and isolated vertices") {
  SUBCASE("path") {
    PlaneGraph t = triangulate_planarization(planar_drawing(path_graph(3)));
    audit_triangulation(t);
  }
  SUBCASE("star") {
    WeightedGraph g(4);
    for (int v = 1; v < 4; ++v) g.add_edge(0, v, Weight::one());
    PlaneGraph t = triangulate_planarization(planar_drawing(g));
    audit_triangulation(t);
  }
  SUBCASE("triangle plus isolated vertex") {
    WeightedGraph g(4);
    g.add_edge(0, 1, Weight::one());
    g.add_edge(1, 2, Weight::one());
    g.add_edge(0, 2, Weight::one());
    PlaneGraph t = triangulate_planarization(planar_drawing(g));
    audit_triangulation(t);
    CHECK(t.degree(3) >= 2);
  }
  SUBCASE("two nodes cannot be triangulated") {
    CHECK_THROWS_AS(triangulate_planarization(planar_drawing(path_graph(2))), domain_error);
  }
}

TEST_CASE("triangulation survives refined random drawings") {
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    Drawing d = refined_drawing(10, 0.4, seed);
    PlaneGraph t = triangulate_planarization(d);
    audit_triangulation(t);
    // original nodes survive untouched
    CHECK(t.graph_vertices() == 10);
  }
}

TEST_CASE("separator on the triangle graph returns the only cycle") {
  Drawing d = planar_drawing(cycle_graph(3));
  PlaneGraph t = triangulate_planarization(d);
  std::vector<double> w = uniform_weights(t);
  CycleCut cut = cycle_separator(t, w);
  std::vector<int> nodes = cut.nodes;
  std::sort(nodes.begin(), nodes.end());
  CHECK(nodes == std::vector<int>{0, 1, 2});
  CHECK(cut.inside == 0.0);
  CHECK(cut.outside == 0.0);
  CHECK(cut.balanced);
  audit_cut(t, w, cut);
}

TEST_CASE("separator balances the octahedron") {
  Drawing d = planar_drawing(octahedron());
  PlaneGraph t = d.map();
  audit_triangulation(t);  // octahedron embeds as a triangulation already
  std::vector<double> w = uniform_weights(t);
  CycleCut cut = cycle_separator(t, w);
  CHECK(cut.balanced);
  audit_cut(t, w, cut);
}

TEST_CASE("separator balances a triangulated grid") {
  Drawing d = planar_drawing(grid_graph(5, 5));
  PlaneGraph t = triangulate_planarization(d);
  audit_triangulation(t);
  std::vector<double> w = uniform_weights(t);
  CycleCut cut = cycle_separator(t, w);
  CHECK(cut.balanced);
  CHECK(std::max(cut.inside, cut.outside) <= 2.0 / 3.0 + 1e-9);
  audit_cut(t, w, cut);
}

TEST_CASE("separator is balanced whenever any fundamental cycle is") {
  // cross-check against a DFS-tree oracle on instances up to 12 nodes
  std::vector<PlaneGraph> inputs;
  inputs.push_back(triangulate_planarization(planar_drawing(cycle_graph(4))));
  inputs.push_back(planar_drawing(octahedron()).map());
  inputs.push_back(triangulate_planarization(planar_drawing(grid_graph(3, 4))));
  for (const PlaneGraph& t : inputs) {
    std::vector<double> w = uniform_weights(t);
    CycleCut cut = cycle_separator(t, w);
    audit_cut(t, w, cut);
    if (any_balanced_fundamental_cycle(t, w)) CHECK(cut.balanced);
  }
}

TEST_CASE("separator rejects bad input") {
  Drawing d = planar_drawing(cycle_graph(4));
  PlaneGraph t = triangulate_planarization(d);
  SUBCASE("weights off by more than the tolerance") {
    std::vector<double> w(t.node_count(), 0.3);
    CHECK_THROWS_AS(cycle_separator(t, w), domain_error);
  }
  SUBCASE("weight vector too short") {
    std::vector<double> w(1, 1.0);
    CHECK_THROWS_AS(cycle_separator(t, w), domain_error);
  }
  SUBCASE("untriangulated map") {
    std::vector<double> w = uniform_weights(d.map());
    CHECK_THROWS_AS(cycle_separator(d.map(), w), domain_error);
  }
}

TEST_CASE("tiny eps produces one disk per vertex plus the rest") {
  Drawing d = planar_drawing(complete_graph(4));
  RegionSubdivision s = subdivide_regions(d, 0.5);  // eps^2 n = 1
  CHECK(s.cap == 1);
  CHECK(int(s.region_faces.size()) == 5);
  audit_subdivision(s, 4);
  int singletons = 0, empties = 0;
  for (const std::vector<int>& verts : s.region_vertices) {
    if (verts.size() == 1) ++singletons;
    if (verts.empty()) ++empties;
  }
  CHECK(singletons == 4);
  CHECK(empties == 1);
}

TEST_CASE("eps one keeps everything in a single region") {
  Drawing d = refined_drawing(12, 0.4, 7);
  RegionSubdivision s = subdivide_regions(d, 1.0);
  CHECK(int(s.region_faces.size()) == 1);
  CHECK(s.cap == 12);
  audit_subdivision(s, 12);
  CHECK(s.boundary_incidences == 0);
}

TEST_CASE("recursive subdivision meets both invariants on refined drawings") {
  for (std::uint64_t seed : {5u, 17u}) {
    for (double eps : {0.5, 0.7}) {
      Drawing d = refined_drawing(16, 0.35, seed);
      RegionSubdivision s = subdivide_regions(d, eps);
      CHECK(s.cap == int(std::ceil(eps * eps * 16)));
      audit_subdivision(s, 16);
      CHECK(int(s.region_faces.size()) >= 2);
      CHECK(double(s.region_faces.size()) <= 10.0 / (eps * eps) + 1e-9);
      CHECK(s.boundary_incidences >= 0);
    }
  }
}

TEST_CASE("region boundaries are closed seg sets and incidences count curves") {
  Drawing d = refined_drawing(14, 0.4, 3);
  RegionSubdivision s = subdivide_regions(d, 0.6);
  audit_subdivision(s, 14);
  std::int64_t curve_borders = 0;
  std::set<int> all_border;
  for (int r = 0; r < int(s.region_faces.size()); ++r) {
    std::vector<int> segs = crosskit::region_boundary_segs(s, r);
    for (int seg : segs) {
      all_border.insert(seg);
      CHECK(s.chart.seg_alive(seg));
    }
  }
  for (int seg : all_border)
    if (s.chart.edge_of_seg(seg) >= 0) ++curve_borders;
  CHECK(curve_borders == s.boundary_incidences);
}

TEST_CASE("degenerate graphs fall back to a single region") {
  SUBCASE("single vertex") {
    WeightedGraph g(1);
    Drawing d = Drawing::from_rotations(std::move(g), {{}});
    RegionSubdivision s = subdivide_regions(d, 0.5);
    CHECK(int(s.region_faces.size()) == 1);
    CHECK(s.vertex_region == std::vector<int>{0});
  }
  SUBCASE("one edge") {
    Drawing d = planar_drawing(path_graph(2));
    RegionSubdivision s = subdivide_regions(d, 0.9);
    CHECK(int(s.region_faces.size()) == 1);
    CHECK(s.vertex_region == std::vector<int>(2, 0));
  }
}

TEST_CASE("subdivision rejects eps outside its range") {
  Drawing d = planar_drawing(complete_graph(4));
  CHECK_THROWS_AS(subdivide_regions(d, 0.0), domain_error);
  CHECK_THROWS_AS(subdivide_regions(d, -0.25), domain_error);
  CHECK_THROWS_AS(subdivide_regions(d, 1.5), domain_error);
}
