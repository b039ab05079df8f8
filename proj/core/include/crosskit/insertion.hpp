#pragma once

#include <cstdint>
#include <vector>

#include "crosskit/drawing.hpp"

namespace crosskit {

// Integer routing costs for the dual search.  Exact (common-denominator
// scaled) when the graph's weights allow it, quantized to 2^-40 otherwise;
// scaffold segments cost 0.  Entries for dead segments are garbage; callers
// refresh the slots they touch after surgery.
class SegCosts {
 public:
  SegCosts(const PlaneGraph& m, const WeightedGraph& g);
  void grow(const PlaneGraph& m);                                   // extend to the current limit
  void refresh(const PlaneGraph& m, const WeightedGraph& g, int s); // recompute one slot
  const std::vector<std::int64_t>& vec() const { return costs_; }

 private:
  std::int64_t of(const Weight& w) const;
  std::vector<std::int64_t> costs_;
  std::int64_t scale_ = 1;
  bool exact_ = true;
};

// Route edge e (present in the graph, not yet drawn) through the drawing at
// minimum added crossing weight and return the extended drawing.  The added
// weight equals w(e) times the cheapest dual path cost, minimal over all
// routings of e with the rest of the drawing fixed.
Drawing insert_edge_optimally(const Drawing& d, int e);

// In-place insertion used by the search loops; keeps `costs` in sync.
void insert_edge_inplace(PlaneGraph& m, const WeightedGraph& g, int e, SegCosts& costs);

// One remove-and-reinsert pass over the drawn edges, always keeping the
// reroute (it is never worse than the curve it replaces); returns true when
// some edge strictly improved.
bool refine_sweep_inplace(PlaneGraph& m, const WeightedGraph& g, SegCosts& costs);

// Remove-and-reinsert until no single-edge redraw strictly lowers the
// crossing weight (exact comparison).  Non-improving reroutes are rolled
// back, so a locally optimal input is returned unchanged.
Drawing refine_locally_optimal(Drawing d);

}  // namespace crosskit
