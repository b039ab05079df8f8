#include "crosskit/insertion.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace crosskit {

namespace {

constexpr std::int64_t kExactScaleCap = 1'000'000'000'000LL;  // path sums stay in int64
constexpr std::int64_t kQuantum = std::int64_t(1) << 40;

// dart at v carrying edge e, or -1
int strand_at(const PlaneGraph& m, int v, int e) {
  for (int d : m.darts_out(v))
    if (m.edge_of_seg(PlaneGraph::seg_of(d)) == e) return d;
  return -1;
}

// the edge crossing e at dummy node d
int partner_edge(const PlaneGraph& m, int d, int e) {
  for (int dart : m.darts_out(d)) {
    int f = m.edge_of_seg(PlaneGraph::seg_of(dart));
    if (f != e) return f;
  }
  throw structure_error("dummy node with a single edge");
}

ExactValue weight_sum(const WeightedGraph& g, const std::vector<int>& edge_ids) {
  ExactValue s = ExactValue::zero();
  for (int e : edge_ids) {
    const Weight& w = g.edges()[std::size_t(e)].w;
    s = s.plus(ExactValue::from_fraction(w.num, w.den));
  }
  return s;
}

}  // namespace

SegCosts::SegCosts(const PlaneGraph& m, const WeightedGraph& g) {
  auto den = g.common_denominator();
  if (den && *den <= kExactScaleCap) {
    exact_ = true;
    scale_ = *den;
  } else {
    exact_ = false;
    scale_ = kQuantum;
  }
  grow(m);
  for (int s = 0; s < int(costs_.size()); ++s)
    if (m.seg_alive(s)) refresh(m, g, s);
}

std::int64_t SegCosts::of(const Weight& w) const {
  if (exact_) return w.num * (scale_ / w.den);
  return std::llround(w.value() * double(scale_));
}

void SegCosts::grow(const PlaneGraph& m) {
  costs_.resize(std::size_t(m.dart_limit() / 2), 0);
}

void SegCosts::refresh(const PlaneGraph& m, const WeightedGraph& g, int s) {
  int e = m.edge_of_seg(s);
  costs_[std::size_t(s)] = e < 0 ? 0 : of(g.edges()[std::size_t(e)].w);
}

void insert_edge_inplace(PlaneGraph& m, const WeightedGraph& g, int e, SegCosts& costs) {
  const auto& ed = g.edges()[std::size_t(e)];
  PlaneGraph::Route r = m.route(ed.u, ed.v, costs.vec());
  std::vector<int> dummies = m.insert_routed(ed.u, ed.v, e, r);
  costs.grow(m);
  for (int s : m.chain_segs(e, ed.u)) costs.refresh(m, g, s);
  for (int d : dummies)
    for (int dart : m.darts_out(d)) costs.refresh(m, g, PlaneGraph::seg_of(dart));
}

Drawing insert_edge_optimally(const Drawing& d, int e) {
  require(e >= 0 && e < d.graph().edge_count(), "edge id out of range");
  require(!d.drawn(e), "edge is already drawn");
  Drawing out = d;
  SegCosts costs(out.map(), out.graph());
  insert_edge_inplace(out.mutable_map(), out.graph(), e, costs);
  out.log("inserted edge " + std::to_string(e) + " along a cheapest dual path");
  return out;
}

bool refine_sweep_inplace(PlaneGraph& m, const WeightedGraph& g, SegCosts& costs) {
  bool any_strict = false;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges()[std::size_t(e)];
    if (strand_at(m, ed.u, e) < 0) continue;  // not drawn
    std::vector<int> old_partners;
    for (int d : m.chain_dummies(e, ed.u)) old_partners.push_back(partner_edge(m, d, e));
    if (old_partners.empty()) continue;  // zero crossings cannot improve
    ExactValue old_sum = weight_sum(g, old_partners);

    m.remove_edge_chain(e);
    PlaneGraph::Route r = m.route(ed.u, ed.v, costs.vec());
    std::vector<int> new_partners;
    for (int s : r.segs) new_partners.push_back(m.edge_of_seg(s));
    ExactValue new_sum = weight_sum(g, new_partners);

    std::vector<int> dummies = m.insert_routed(ed.u, ed.v, e, r);
    costs.grow(m);
    for (int s : m.chain_segs(e, ed.u)) costs.refresh(m, g, s);
    for (int d : dummies)
      for (int dart : m.darts_out(d)) costs.refresh(m, g, PlaneGraph::seg_of(dart));

    if (new_sum.compare(old_sum) < 0) any_strict = true;
  }
  return any_strict;
}

Drawing refine_locally_optimal(Drawing d) {
  const WeightedGraph& g = d.graph();
  constexpr int kSweepCap = 64;
  int accepted = 0;
  for (int sweep = 0; sweep < kSweepCap; ++sweep) {
    bool any_strict = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edges()[std::size_t(e)];
      if (strand_at(d.map(), ed.u, e) < 0) continue;
      std::vector<int> old_partners;
      for (int dm : d.map().chain_dummies(e, ed.u))
        old_partners.push_back(partner_edge(d.map(), dm, e));
      if (old_partners.empty()) continue;
      ExactValue old_sum = weight_sum(g, old_partners);
      if (old_sum.num == 0) continue;  // nothing to gain

      PlaneGraph backup = d.map();
      PlaneGraph& m = d.mutable_map();
      m.remove_edge_chain(e);
      SegCosts costs(m, g);
      PlaneGraph::Route r = m.route(ed.u, ed.v, costs.vec());
      std::vector<int> new_partners;
      for (int s : r.segs) new_partners.push_back(m.edge_of_seg(s));

      if (weight_sum(g, new_partners).compare(old_sum) < 0) {
        m.insert_routed(ed.u, ed.v, e, r);
        any_strict = true;
        ++accepted;
      } else {
        d.mutable_map() = std::move(backup);  // keep the old curve on ties
      }
    }
    if (!any_strict) break;
  }
  if (accepted > 0)
    d.log("refined by rerouting, " + std::to_string(accepted) + " strict improvements");
  return d;
}

}  // namespace crosskit
