#pragma once

// Blow-up of a drawing: every vertex becomes a cluster of m copies packed
// into a small disk, and every curve is replicated into an m x m bundle that
// runs parallel to the original.  A crossing of the blown-up drawing is
// "good" when its four endpoint clusters are pairwise distinct; good
// crossings are exactly the copies of original crossings, m^4 per original
// one.  All other crossings stay local to some cluster disk.
//
// project_random inverts the construction in expectation: keeping one
// uniform copy per cluster and restricting the drawing to it loses each good
// crossing with probability 1 - 1/m^4.

#include <cstdint>
#include <vector>

#include "crosskit/drawing.hpp"

namespace crosskit {

// Replicate d into a drawing of blow_up(d.graph(), m).  Clusters are the
// consecutive vertex blocks {im, ..., im+m-1}; copy 0 of each cluster reuses
// the original curves.  For m >= 2 the input must not cross any pair of
// edges twice nor any adjacent pair at all (each bundle curve must meet each
// other curve at most once).  m = 1 returns d unchanged.
Drawing blow_up_drawing(const Drawing& d, int m);

// True when the crossing at `dummy` involves four pairwise distinct clusters
// of an m-blow-up.
bool good_crossing(const Drawing& d, int m, int dummy);

// Number of crossings of d whose four endpoint clusters are distinct.
int count_good_crossings(const Drawing& d, int m);

// Sub-drawing induced by picking copy picks[i] (0 <= picks[i] < m) from
// cluster i, relabeled back to one vertex per cluster.
Drawing project_to(const Drawing& d, int m, const std::vector<int>& picks);

// project_to with one uniformly chosen copy per cluster, deterministic in
// seed.
Drawing project_random(const Drawing& d, int m, std::uint64_t seed);

}  // namespace crosskit
