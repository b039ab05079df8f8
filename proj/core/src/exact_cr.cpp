#include <algorithm>
#include <chrono>
#include <queue>
#include <utility>
#include <vector>

#include "crosskit/exact_cr.hpp"
#include "crosskit/realize.hpp"

namespace crosskit {

namespace {

struct PairCand {
  ExactValue cost;  // product of the two edge weights
  int a, b;         // edge ids, a < b
};

// Search node: a set of candidate indices, increasing.  `prefix` is the cost
// without the last pick, so both child costs derive without subtraction.
struct SearchNode {
  ExactValue cost;
  ExactValue prefix;
  std::vector<int> picks;
};

// min-heap: cheapest first, ties by lexicographically smallest pick set
struct NodeAfter {
  bool operator()(const SearchNode& x, const SearchNode& y) const {
    int c = x.cost.compare(y.cost);
    if (c != 0) return c > 0;
    return x.picks > y.picks;
  }
};

}  // namespace

CrSolution crossing_number_exact(const WeightedGraph& g, Budget budget) {
  require(budget.seconds_limit >= 0.0, "negative time budget");
  auto t_start = std::chrono::steady_clock::now();

  // heuristic incumbent; the search only has to close the gap below it
  constexpr int kIncumbentRestarts = 24;
  constexpr std::uint64_t kIncumbentSeed = 0xC05FEE;
  CrSolution best = crossing_number_upper(g, kIncumbentRestarts, kIncumbentSeed);
  best.budget = budget;
  best.nodes_explored = 0;
  if (best.value.num == 0) {  // a planar drawing is unbeatable
    best.exact = true;
    return best;
  }

  const auto& E = g.edges();
  const int m = g.edge_count();
  std::vector<PairCand> cand;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (E[std::size_t(a)].u == E[std::size_t(b)].u || E[std::size_t(a)].u == E[std::size_t(b)].v ||
          E[std::size_t(a)].v == E[std::size_t(b)].u || E[std::size_t(a)].v == E[std::size_t(b)].v)
        continue;
      cand.push_back({weight_product(E[std::size_t(a)].w, E[std::size_t(b)].w), a, b});
    }
  std::sort(cand.begin(), cand.end(), [](const PairCand& x, const PairCand& y) {
    int c = x.cost.compare(y.cost);
    if (c != 0) return c < 0;
    return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
  });
  const int p = int(cand.size());

  // Euler forces this many crossings: deleting one edge per crossing must
  // leave a planar graph, so m - k <= 3n - 6
  int skew = m - std::max(0, 3 * g.vertex_count() - 6);
  if (skew < 0) skew = 0;

  std::priority_queue<SearchNode, std::vector<SearchNode>, NodeAfter> pq;
  pq.push({ExactValue::zero(), ExactValue::zero(), {}});
  std::uint64_t pops = 0;
  bool out_of_budget = false;
  bool proven = false;

  while (!pq.empty()) {
    SearchNode node = pq.top();
    pq.pop();
    ++pops;
    if (budget.node_limit && pops > budget.node_limit) {
      out_of_budget = true;
      break;
    }
    if (budget.seconds_limit > 0 && (pops & 0xFF) == 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
      if (el > budget.seconds_limit) {
        out_of_budget = true;
        break;
      }
    }
    if (node.cost.compare(best.value) >= 0) {
      proven = true;  // every unexplored set costs at least the incumbent
      break;
    }
    if (int(node.picks.size()) >= skew) {
      std::vector<std::pair<int, int>> pairs;
      pairs.reserve(node.picks.size());
      for (int i : node.picks) pairs.push_back({cand[std::size_t(i)].a, cand[std::size_t(i)].b});
      if (auto d = realize(g, pairs)) {
        // all cheaper candidate sets failed, so this drawing is optimal
        best.value = d->crossing_weight();
        best.drawing = std::move(*d);
        proven = true;
        break;
      }
    }
    int last = node.picks.empty() ? -1 : node.picks.back();
    if (last + 1 < p) {
      SearchNode app;
      app.picks = node.picks;
      app.picks.push_back(last + 1);
      app.prefix = node.cost;
      app.cost = node.cost.plus(cand[std::size_t(last + 1)].cost);
      pq.push(std::move(app));
      if (last >= 0) {
        SearchNode shift;
        shift.picks = std::move(node.picks);
        shift.picks.back() = last + 1;
        shift.prefix = node.prefix;
        shift.cost = node.prefix.plus(cand[std::size_t(last + 1)].cost);
        pq.push(std::move(shift));
      }
    }
  }

  best.nodes_explored = pops;
  best.exact = proven || !out_of_budget;  // an emptied queue also closes the search
  return best;
}

CrSolution crossing_number_quotient(const QuotientGraph& q, Budget budget) {
  constexpr int kExactEdgeLimit = 16;
  constexpr int kFallbackRestarts = 32;
  constexpr std::uint64_t kFallbackSeed = 0x5EED;
  if (q.base.edge_count() <= kExactEdgeLimit) return crossing_number_exact(q.base, budget);
  CrSolution s = crossing_number_upper(q.base, kFallbackRestarts, kFallbackSeed);
  s.budget = budget;
  return s;
}

}  // namespace crosskit
