#pragma once

// Planarization of a drawing, stored as a combinatorial map.  Nodes are the
// graph vertices plus one degree-4 dummy per crossing; segments are the curve
// pieces between consecutive nodes.  Each segment owns two darts (2s, 2s+1);
// darts carry rotation links (next/prev around their origin) and a face id.
// Faces are the orbits of phi(d) = rotation_next(twin(d)).
//
// Surgery (routed insertion, chain removal) repairs faces locally, so the
// structure stays valid after every public operation.  Disconnected maps are
// supported with a fixed nesting policy: every secondary component floats in
// the root component's largest face.

#include <cstdint>
#include <string>
#include <vector>

#include "crosskit/util.hpp"

namespace crosskit {

class PlaneGraph {
 public:
  static constexpr int kNoEdge = -1;  // segment not owned by a graph edge

  struct Stub {
    int to;    // neighbor node
    int edge;  // graph edge id owning this segment, or kNoEdge
  };

  PlaneGraph() = default;

  // Build from per-node cyclic neighbor lists (a rotation system).  Every
  // {node, stub} must have a matching reverse entry; parallel segments and
  // loops are rejected.  `graph_vertices` marks how many leading node ids are
  // real vertices (the rest are dummies).
  static PlaneGraph from_rotations(const std::vector<std::vector<Stub>>& rotations,
                                   int graph_vertices);

  // --- inspection ---------------------------------------------------------
  int node_count() const { return int(node_alive_.size()); }
  int graph_vertices() const { return graph_vertices_; }  // live real vertices
  bool node_alive(int v) const { return node_alive_[v]; }
  bool is_dummy(int v) const { return node_dummy_[v]; }
  int degree(int v) const;
  bool isolated(int v) const { return first_dart_[v] < 0; }

  int dart_limit() const { return int(dart_from_.size()); }  // ids < this (some dead)
  bool dart_alive(int d) const { return dart_from_[d] >= 0; }
  int from(int d) const { return dart_from_[d]; }
  int to(int d) const { return dart_from_[d ^ 1]; }
  static int twin(int d) { return d ^ 1; }
  int next(int d) const { return dart_next_[d]; }
  int prev(int d) const { return dart_prev_[d]; }
  int face(int d) const { return dart_face_[d]; }
  int phi(int d) const { return dart_next_[d ^ 1]; }  // walks the face left of d
  static int seg_of(int d) { return d >> 1; }
  int edge_of_seg(int s) const { return seg_edge_[s]; }
  int seg_dart(int s) const { return 2 * s; }
  bool seg_alive(int s) const { return dart_from_[2 * s] >= 0; }
  int segment_count() const;  // live segments
  int face_count() const;     // live faces
  int face_id_limit() const { return face_limit_; }

  std::vector<int> darts_out(int v) const;            // rotation order
  std::vector<int> face_darts(int f) const;           // one orbit walk
  std::vector<int> faces_at(int v) const;             // faces incident to v, sorted, unique
  int any_dart_of_face(int f) const;                  // f must be a live face id

  // ordered chain of segments of a graph edge, walked from endpoint `start`
  std::vector<int> chain_segs(int edge, int start) const;
  // interior dummy nodes of the chain, in the same order
  std::vector<int> chain_dummies(int edge, int start) const;

  // connected components over live nodes (segments as adjacency); isolated
  // nodes are their own components
  std::vector<int> components() const;

  // structural audit: twin/next/prev/face consistency plus per-component
  // Euler formula v - e + f = 2; throws structure_error on any violation
  void validate() const;

  // --- dual routing -------------------------------------------------------
  struct Route {
    std::vector<int> segs;        // crossed segments, in order
    std::vector<int> entry_face;  // face entered after crossing segs[i]
    std::vector<int> exit_face;   // face left when crossing segs[i]
    int source_face = -1;         // concrete face at the start (-1: floating start)
    int target_face = -1;         // concrete face at the end   (-1: floating end)
    std::int64_t cost = 0;        // sum of seg_cost over segs
    int hops = 0;                 // number of crossings
  };

  // Cheapest dual path between nodes u and v.  seg_cost must cover every
  // segment id (size >= dart_limit()/2); seg_cost[s] < 0 marks s as not
  // crossable.  Faces of nested components are unified into regions under the
  // floating policy, so routes exist whenever both endpoints are alive.
  // Deterministic: ties broken by (cost, crossings, face id), then by
  // discovery order of equal-cost predecessors.
  Route route(int u, int v, const std::vector<std::int64_t>& seg_cost) const;

  // --- surgery ------------------------------------------------------------
  // add an isolated node: a fresh graph vertex, or a scaffold point when
  // `dummy` is set
  int add_node(bool dummy = false);

  // insert edge `edge` from u to v along r; returns the new dummy node ids
  // (one per crossed segment, in order)
  std::vector<int> insert_routed(int u, int v, int edge, const Route& r);

  // remove every segment of `edge`, smoothing its crossing dummies away
  void remove_edge_chain(int edge);

  // subdivide segment s with a fresh degree-2 node; returns the node.  The
  // two halves keep s's edge id; faces are unchanged.
  int subdivide(int s);

  // add a segment across a face, between the corner before dart `at_a` and
  // the corner before dart `at_b` (both darts must bound the same face and
  // leave distinct nodes).  Returns the even dart, oriented a -> b; the face
  // splits in two.
  int add_chord(int at_a, int at_b, int edge);

  // triangulate face f with a fresh scaffold apex joined to every corner.
  // Works on any face (including walks that repeat a node); every resulting
  // face is a triangle with three distinct nodes.  Returns the apex.
  int star_face(int f);

  // smooth a degree-2 node away, merging its two segments (they must carry
  // the same edge id); faces unchanged
  void smooth_degree2(int v);

  // drop a dummy whose rotation does not alternate between its two edges
  // (a touching): reconnects both chains without the node.  Requires the
  // rotation at v to be e,e,g,g; faces are repaired.
  void smooth_touching(int v);

  // relabel the edge ids of segments (used when a scaffold edge is adopted)
  void set_seg_edge(int s, int edge) { seg_edge_[s] = edge; }

  std::string debug_string() const;

 private:
  int new_dart_pair();  // returns even dart id d; pair is (d, d+1)
  int add_node_with_comp(bool dummy, int comp);  // comp < 0: fresh component id
  void splice_before(int d, int at);   // insert dart d before dart `at` in its rotation
  void splice_single(int d);           // rotation of a previously isolated node
  void unsplice(int d);                // remove dart from its rotation
  void retrace_faces(const std::vector<int>& seed_darts);
  void bypass_pair(int a, int b);      // merge segments of darts a,b out of one node
  void kill_dart_pair(int d);
  void kill_node(int v);
  int fresh_face();
  void ensure_components() const;      // refresh comp_cache_ if invalidated
  void touch_face(int f) const;        // init per-call routing state lazily

  int graph_vertices_ = 0;
  std::vector<char> node_alive_, node_dummy_;
  std::vector<int> first_dart_;  // any dart out of node, -1 if isolated
  std::vector<int> dart_from_, dart_next_, dart_prev_, dart_face_;
  std::vector<int> seg_edge_;
  std::vector<int> free_darts_;  // even ids of dead pairs
  int face_limit_ = 0;           // face ids are < face_limit_; some are stale
  std::vector<int> face_dart_;   // live face id -> one dart on its orbit

  // component cache: comp_count_ < 0 means it must be recomputed
  mutable std::vector<int> comp_cache_;
  mutable int comp_count_ = -1;
  mutable int next_comp_id_ = 0;
  mutable std::vector<int> bfs_scratch_;

  // per-route scratch, validity tracked by epoch stamps so calls cost only
  // what they touch (face ids grow without bound across surgeries)
  mutable std::vector<std::uint32_t> f_epoch_;
  mutable std::uint32_t epoch_now_ = 0;
  mutable std::vector<std::int64_t> f_dist_;
  mutable std::vector<int> f_hops_, f_pface_, f_pseg_, f_src_;
  mutable std::vector<char> f_state_, f_targ_;
};

}  // namespace crosskit
