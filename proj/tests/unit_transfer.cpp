#include "crosskit/transfer.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "crosskit/cutmetric.hpp"
#include "crosskit/drawing.hpp"
#include "crosskit/exact_cr.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/insertion.hpp"
#include "crosskit/util.hpp"
#include "crosskit/weight.hpp"
#include "doctest.h"

using crosskit::complete_graph;
using crosskit::crossing_lower_bound;
using crosskit::crossing_number_exact;
using crosskit::crossing_number_upper;
using crosskit::CrSolution;
using crosskit::cut_distance_exact;
using crosskit::domain_error;
using crosskit::Drawing;
using crosskit::ExactValue;
using crosskit::random_graph;
using crosskit::refine_locally_optimal;
using crosskit::serialize_drawing;
using crosskit::transfer_drawing;
using crosskit::TransferTrace;
using crosskit::VertexPartition;
using crosskit::Weight;
using crosskit::WeightedGraph;

namespace {

// locally optimal simple drawing to transfer from
Drawing settled_upper(const WeightedGraph& g, std::uint64_t seed) {
  return refine_locally_optimal(crossing_number_upper(g, 3, seed).drawing);
}

// K_5 with one edge at a lighter weight
WeightedGraph reweighted_k5(int a, int b, const Weight& w) {
  WeightedGraph g(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      g.add_edge(u, v, u == a && v == b ? w : Weight::one());
  return g;
}

}  // namespace

TEST_CASE("transferring a graph onto its own drawing preserves the crossing weight") {
  WeightedGraph k5 = complete_graph(5);
  Drawing d1 = crossing_number_exact(k5).drawing;
  auto [out, trace] = transfer_drawing(k5, d1, k5, VertexPartition::singletons(5), 17);
  out.validate(true);
  CHECK(out.crossing_weight().compare(d1.crossing_weight()) == 0);
  CHECK(trace.closeness == 0.0);
  CHECK(trace.closeness_exact);
  CHECK(trace.lonely_pairs.empty());
  CHECK(trace.lonely_edges.empty());
  CHECK(trace.rerouted == 0);
  // singleton clusters leave each pair exactly one candidate: the edge itself
  for (int e = 0; e < k5.edge_count(); ++e) CHECK(trace.representative[std::size_t(e)] == e);
  // no two crossing edges share a cluster, so every crossing is good
  CHECK(trace.bad == 0);
  CHECK(trace.good_long_long == out.crossing_count());
}

TEST_CASE("identity transfer of a denser random graph is also weight-preserving") {
  WeightedGraph g = random_graph(10, 0.5, 23);
  Drawing d1 = settled_upper(g, 5);
  auto [out, trace] = transfer_drawing(g, d1, g, VertexPartition::singletons(10), 99);
  out.validate(true);
  CHECK(out.crossing_weight().compare(d1.crossing_weight()) == 0);
  CHECK(trace.rerouted == 0);
  CHECK(trace.bad == 0);
}

TEST_CASE("reweighting one K_5 edge transfers to a drawing between the old and new optimum") {
  WeightedGraph k5 = complete_graph(5);
  Drawing d1 = crossing_number_exact(k5).drawing;
  WeightedGraph g2 = reweighted_k5(0, 1, Weight(9, 10));
  CrSolution exact2 = crossing_number_exact(g2);
  REQUIRE(exact2.value.compare(ExactValue::from_fraction(9, 10)) == 0);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto [out, trace] = transfer_drawing(k5, d1, g2, VertexPartition::singletons(5), seed);
    out.validate(true);
    // never below the optimum, never above the weight the old drawing realizes
    CHECK(out.crossing_weight().compare(exact2.value) >= 0);
    CHECK(out.crossing_weight().approx <= 1.0 + 1e-12);
  }
}

TEST_CASE("one drawing read under two close weightings differs by far less than d^2 n^8") {
  const int n = 8;
  WeightedGraph g1(n), g2(n);
  crosskit::Rng rng = crosskit::Rng::stream(71, 4);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::int64_t tenths = 2 + std::int64_t(rng.below(9));  // 0.2 .. 1.0
      g1.add_edge(u, v, Weight(tenths, 10));
      std::int64_t shifted = tenths + (rng.below(3) == 0 ? (tenths > 5 ? -1 : 1) : 0);
      g2.add_edge(u, v, Weight(shifted, 10));
    }
  Drawing d = settled_upper(g1, 11);
  double w1 = 0, w2 = 0;
  for (auto [e, f] : d.crossing_pairs()) {
    w1 += g1.edges()[std::size_t(e)].w.value() * g1.edges()[std::size_t(f)].w.value();
    w2 += g2.edges()[std::size_t(e)].w.value() * g2.edges()[std::size_t(f)].w.value();
  }
  double dist = cut_distance_exact(g1, g2).value.approx;
  CHECK(std::abs(w1 - w2) <= dist * dist * std::pow(double(n), 8) + 1e-9);
}

TEST_CASE("transferred drawings never beat the exact optimum of the target graph") {
  WeightedGraph g1 = complete_graph(5);
  Drawing d1 = crossing_number_exact(g1).drawing;
  // target: drop one edge, lighten another; exact optimum known by the solver
  WeightedGraph g2(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) {
      if (u == 0 && v == 3) continue;
      g2.add_edge(u, v, u == 1 && v == 4 ? Weight(1, 2) : Weight::one());
    }
  ExactValue best = crossing_number_exact(g2).value;
  VertexPartition clusters(5, {{0, 1, 2}, {3, 4}});
  double weight_sum = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto [out, trace] = transfer_drawing(g1, d1, g2, clusters, seed);
    CHECK(out.crossing_weight().compare(best) >= 0);
    weight_sum += out.crossing_weight().approx;
    // representatives stay within their cluster pair
    for (int e = 0; e < g2.edge_count(); ++e) {
      int rep = trace.representative[std::size_t(e)];
      if (rep < 0) continue;
      const auto& ge = g2.edges()[std::size_t(e)];
      const auto& re = g1.edges()[std::size_t(rep)];
      int ci = clusters.class_of(ge.u), cj = clusters.class_of(ge.v);
      int ri = clusters.class_of(re.u), rj = clusters.class_of(re.v);
      CHECK(std::minmax(ci, cj) == std::minmax(ri, rj));
    }
  }
  CHECK(std::isfinite(weight_sum / 200.0));
}

TEST_CASE("transfer is deterministic in the seed") {
  WeightedGraph g1 = random_graph(9, 0.6, 2);
  WeightedGraph g2 = random_graph(9, 0.6, 8);
  Drawing d1 = settled_upper(g1, 1);
  VertexPartition clusters(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  auto [a, ta] = transfer_drawing(g1, d1, g2, clusters, 424242);
  auto [b, tb] = transfer_drawing(g1, d1, g2, clusters, 424242);
  CHECK(serialize_drawing(a) == serialize_drawing(b));
  CHECK(ta.representative == tb.representative);
  CHECK(ta.lonely_edges == tb.lonely_edges);
  auto [c, tc] = transfer_drawing(g1, d1, g2, clusters, 7);
  c.validate(true);  // different seed still yields a consistent drawing
}

TEST_CASE("transfer between random graphs stays valid and above the certified floor") {
  WeightedGraph g1 = random_graph(12, 0.45, 31);
  WeightedGraph g2 = random_graph(12, 0.45, 32);
  Drawing d1 = settled_upper(g1, 6);
  VertexPartition clusters(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}});
  auto [out, trace] = transfer_drawing(g1, d1, g2, clusters, 5);
  out.validate(true);
  CHECK(out.crossing_weight().compare(crossing_lower_bound(g2)) >= 0);
  std::int64_t counted = trace.good_long_long + trace.good_long_short +
                         trace.good_short_short + trace.bad + trace.lonely_crossings;
  CHECK(counted == out.crossing_count());
  // the lonely list and the per-edge table agree
  for (int e : trace.lonely_edges) CHECK(trace.representative[std::size_t(e)] == -1);
}

TEST_CASE("mismatched inputs are rejected") {
  WeightedGraph k5 = complete_graph(5);
  Drawing d1 = crossing_number_exact(k5).drawing;
  CHECK_THROWS_AS(transfer_drawing(k5, d1, complete_graph(6),
                                   VertexPartition::singletons(5), 1),
                  domain_error);
  CHECK_THROWS_AS(transfer_drawing(k5, d1, complete_graph(5),
                                   VertexPartition::singletons(6), 1),
                  domain_error);
  CHECK_THROWS_AS(transfer_drawing(complete_graph(6), d1, complete_graph(6),
                                   VertexPartition::singletons(6), 1),
                  domain_error);
}
