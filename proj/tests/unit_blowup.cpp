#include "crosskit/blowup_drawing.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crosskit/drawing.hpp"
#include "crosskit/exact_cr.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/util.hpp"
#include "crosskit/weight.hpp"
#include "doctest.h"

using crosskit::blow_up;
using crosskit::blow_up_drawing;
using crosskit::complete_graph;
using crosskit::count_good_crossings;
using crosskit::crossing_number_exact;
using crosskit::domain_error;
using crosskit::Drawing;
using crosskit::ExactValue;
using crosskit::good_crossing;
using crosskit::PlaneGraph;
using crosskit::project_random;
using crosskit::project_to;
using crosskit::serialize_drawing;
using crosskit::serialize_graph_json;
using crosskit::Weight;
using crosskit::weight_product;
using crosskit::WeightedGraph;

namespace {

Drawing optimal_complete(int n) {
  crosskit::CrSolution s = crossing_number_exact(complete_graph(n));
  REQUIRE(s.exact);
  return s.drawing;
}

// sum of w(e)·w(f) over the crossings whose four clusters are distinct
ExactValue good_weight(const Drawing& d, int m) {
  ExactValue total = ExactValue::zero();
  const PlaneGraph& map = d.map();
  const auto& es = d.graph().edges();
  for (int v = 0; v < map.node_count(); ++v) {
    if (!map.node_alive(v) || !map.is_dummy(v)) continue;
    if (!good_crossing(d, m, v)) continue;
    auto [e, f] = d.crossing_at(v);
    total = total.plus(weight_product(es[std::size_t(e)].w, es[std::size_t(f)].w));
  }
  return total;
}

// a pair of independent edges crossing twice (with a third edge as a spacer)
Drawing doubly_crossed() {
  WeightedGraph g(6);
  g.add_edge(0, 1, Weight::one());
  g.add_edge(2, 3, Weight::one());
  g.add_edge(4, 5, Weight::one());
  return Drawing::from_rotations(g, {
                                        {{6, 0}},
                                        {{7, 0}},
                                        {{6, 1}},
                                        {{7, 1}},
                                        {{8, 2}},
                                        {{8, 2}},
                                        {{0, 0}, {2, 1}, {7, 0}, {8, 1}},
                                        {{6, 0}, {3, 1}, {1, 0}, {8, 1}},
                                        {{4, 2}, {6, 1}, {5, 2}, {7, 1}},
                                    });
}

}  // namespace

TEST_CASE("blow-up by one and projection by one are identities") {
  Drawing d = optimal_complete(5);
  CHECK(serialize_drawing(blow_up_drawing(d, 1)) == serialize_drawing(d));
  CHECK(serialize_drawing(project_to(d, 1, std::vector<int>(5, 0))) ==
        serialize_drawing(d));
  CHECK(serialize_drawing(project_random(d, 1, 99)) == serialize_drawing(d));
}

TEST_CASE("blow-up of a plane drawing has no good crossings") {
  Drawing d = Drawing::planar(complete_graph(4));
  for (int m : {2, 3}) {
    Drawing b = blow_up_drawing(d, m);
    b.validate(true);
    CHECK(serialize_graph_json(b.graph()) ==
          serialize_graph_json(blow_up(d.graph(), m)));
    CHECK(b.drawn_edges() == 6 * m * m);
    CHECK(count_good_crossings(b, m) == 0);
    CHECK(b.is_simple());
    // every crossing stays inside a cluster disk, so the unweighted total is
    // at most (#clusters) · C(m,2) · C(nm,2)
    int pairs_in_cluster = m * (m - 1) / 2;
    int nm = 4 * m;
    CHECK(b.crossing_count() <= 4 * pairs_in_cluster * (nm * (nm - 1) / 2));
  }
}

TEST_CASE("blow-up turns each crossing into m^4 good copies") {
  Drawing k5 = optimal_complete(5);
  REQUIRE(k5.crossing_count() == 1);
  for (int m : {2, 3}) {
    Drawing b = blow_up_drawing(k5, m);
    b.validate(true);
    const int m4 = m * m * m * m;
    CHECK(count_good_crossings(b, m) == m4);
    CHECK(b.is_simple());
    // spec'd unweighted ceiling: good copies plus cluster-local crossings
    int nm = 5 * m;
    CHECK(b.crossing_count() <= m4 + 5 * (m * (m - 1) / 2) * (nm * (nm - 1) / 2));
    // every copy has one strand per bundle edge at each of its 4 neighbors
    for (int v = 0; v < 5 * m; ++v) CHECK(int(b.rotation_of(v).size()) == 4 * m);
  }

  Drawing k6 = optimal_complete(6);
  REQUIRE(k6.crossing_count() == 3);
  Drawing b = blow_up_drawing(k6, 2);
  CHECK(count_good_crossings(b, 2) == 3 * 16);
  CHECK(b.is_simple());
}

TEST_CASE("good crossing weight scales by m^4 under weighted blow-up") {
  WeightedGraph g = complete_graph(5);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = std::pair(g.edges()[std::size_t(e)].u, g.edges()[std::size_t(e)].v);
    g.set_edge(u, v, Weight::parse("0.5"));
  }
  crosskit::CrSolution s = crossing_number_exact(g);
  REQUIRE(s.exact);
  REQUIRE(s.value.num == 1);  // (1/2)^2 = 1/4
  REQUIRE(s.value.den == 4);
  Drawing b = blow_up_drawing(s.drawing, 2);
  ExactValue gw = good_weight(b, 2);
  // 16 copies, each of weight 1/4
  CHECK(gw.num == 4);
  CHECK(gw.den == 1);
  CHECK(gw.compare(s.value.scaled(16, 1)) == 0);
}

TEST_CASE("random projection restores the original graph deterministically") {
  Drawing k5 = optimal_complete(5);
  Drawing b = blow_up_drawing(k5, 2);
  std::string first;
  for (std::uint64_t seed : {7u, 7u, 21u, 1000u}) {
    Drawing p = project_random(b, 2, seed);
    p.validate(true);
    CHECK(p.graph().vertex_count() == 5);
    CHECK(serialize_graph_json(p.graph()) == serialize_graph_json(k5.graph()));
    CHECK(p.is_simple());
    if (seed == 7u) {
      if (first.empty())
        first = serialize_drawing(p);
      else
        CHECK(serialize_drawing(p) == first);  // same seed, same projection
    }
  }
}

TEST_CASE("exhaustive projection mean meets the expectation bound") {
  // every pick vector is enumerated, so the mean is an exact fraction
  struct Case {
    Drawing base;
    int m;
  };
  std::vector<Case> cases;
  cases.push_back({optimal_complete(5), 2});              // n·m = 10
  cases.push_back({Drawing::planar(complete_graph(4)), 3});  // n·m = 12

  for (const Case& c : cases) {
    Drawing b = blow_up_drawing(c.base, c.m);
    const int n = c.base.graph().vertex_count();
    const int m4 = c.m * c.m * c.m * c.m;
    std::int64_t combos = 1;
    for (int i = 0; i < n; ++i) combos *= c.m;

    ExactValue sum = ExactValue::zero();
    std::vector<int> picks(std::size_t(n), 0);
    for (std::int64_t it = 0; it < combos; ++it) {
      sum = sum.plus(project_to(b, c.m, picks).crossing_weight());
      for (int i = 0; i < n; ++i) {  // odometer over pick vectors
        if (++picks[std::size_t(i)] < c.m) break;
        picks[std::size_t(i)] = 0;
      }
    }
    // mean ≤ total/m^4  ⇔  sum·m^4 ≤ total·combos
    ExactValue lhs = sum.scaled(m4, 1);
    ExactValue rhs = b.crossing_weight().scaled(combos, 1);
    CHECK(lhs.compare(rhs) <= 0);
    // cluster-local crossings never survive (their two same-cluster copies
    // are distinct), so the mean equals good weight / m^4 exactly
    ExactValue good_total = good_weight(b, c.m);
    CHECK(lhs.compare(good_total.scaled(combos, 1)) == 0);
  }
}

TEST_CASE("blow-up and projection reject bad inputs") {
  Drawing k5 = optimal_complete(5);
  CHECK_THROWS_AS(blow_up_drawing(k5, 0), domain_error);
  CHECK_THROWS_AS(blow_up_drawing(k5, -2), domain_error);
  CHECK_THROWS_AS(blow_up_drawing(doubly_crossed(), 2), domain_error);

  Drawing b = blow_up_drawing(k5, 2);
  CHECK_THROWS_AS(project_to(b, 3, std::vector<int>(5, 0)), domain_error);
  CHECK_THROWS_AS(project_to(b, 2, std::vector<int>(4, 0)), domain_error);
  CHECK_THROWS_AS(project_to(b, 2, std::vector<int>(5, 2)), domain_error);
  CHECK_THROWS_AS(project_random(k5, 2, 1), domain_error);  // 5 is not 2·k

  // an edge inside a cluster disqualifies the cluster structure
  WeightedGraph pair(2);
  pair.add_edge(0, 1, Weight::one());
  Drawing d = Drawing::planar(pair);
  CHECK_THROWS_AS(project_to(d, 2, std::vector<int>(1, 0)), domain_error);
}
