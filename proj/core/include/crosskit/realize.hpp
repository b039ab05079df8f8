#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crosskit/drawing.hpp"

namespace crosskit {

// Search for a drawing of g whose crossings are exactly the given pairs, up to
// dropped touchings (the result's crossing multiset is a subset of `pairs`).
// Pairs must be independent (no shared endpoint) and unique.  The search runs
// over the per-edge orders in which each edge meets its partners, lexicographic
// order, first planar configuration wins; nullopt when no order is planar.
std::optional<Drawing> realize(const WeightedGraph& g,
                               const std::vector<std::pair<int, int>>& pairs);

}  // namespace crosskit
