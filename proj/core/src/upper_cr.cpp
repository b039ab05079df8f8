#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <utility>

#include "crosskit/exact_cr.hpp"
#include "crosskit/insertion.hpp"
#include "crosskit/planarity.hpp"

namespace crosskit {

int worker_threads(int cap) {
  if (cap < 1) cap = 1;
  int n = 0;
  if (const char* env = std::getenv("CROSSKIT_THREADS")) n = std::atoi(env);
  if (n < 1) n = int(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  return std::min(n, cap);
}

namespace {

// One seeded attempt: greedy maximal planar subgraph in a shuffled
// weight-descending order, then routed insertion of the rest, one sweep.
Drawing one_restart(const WeightedGraph& g, std::uint64_t seed, int restart) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Rng rng = Rng::stream(seed, std::uint64_t(restart));

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edges()[std::size_t(b)].w < g.edges()[std::size_t(a)].w;
  });

  std::vector<std::pair<int, int>> sub;
  std::vector<int> sub_ids;
  std::vector<char> kept(std::size_t(m), 0);
  for (int e : order) {
    sub.push_back({g.edges()[std::size_t(e)].u, g.edges()[std::size_t(e)].v});
    if (is_planar(n, sub)) {
      sub_ids.push_back(e);
      kept[std::size_t(e)] = 1;
    } else {
      sub.pop_back();
    }
  }

  Embedding emb = planar_embedding(n, sub);
  for (auto& rot : emb.rotations)
    for (auto& s : rot) s.edge = sub_ids[std::size_t(s.edge)];
  PlaneGraph map = PlaneGraph::from_rotations(emb.rotations, n);

  SegCosts costs(map, g);
  for (int e : order)
    if (!kept[std::size_t(e)]) insert_edge_inplace(map, g, e, costs);
  refine_sweep_inplace(map, g, costs);

  Drawing d(g, std::move(map));
  d.log("restart " + std::to_string(restart) + ": planar core of " +
        std::to_string(sub_ids.size()) + " edges, " + std::to_string(m - int(sub_ids.size())) +
        " routed in");
  return d;
}

}  // namespace

CrSolution crossing_number_upper(const WeightedGraph& g, int restarts, std::uint64_t seed) {
  require(restarts >= 1, "need at least one restart");

  struct Best {
    ExactValue value;
    Drawing drawing;
    int restart = -1;
  };
  int workers = worker_threads(restarts);
  std::vector<Best> best_of(static_cast<std::size_t>(workers));

  auto run_slice = [&](int tid) {
    Best& b = best_of[std::size_t(tid)];
    for (int r = tid; r < restarts; r += workers) {
      Drawing d = one_restart(g, seed, r);
      ExactValue v = d.crossing_weight();
      if (b.restart < 0 || v.compare(b.value) < 0) b = Best{v, std::move(d), r};
    }
  };
  if (workers == 1) {
    run_slice(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(run_slice, t);
    for (auto& th : pool) th.join();
  }

  // deterministic merge: smallest value, then earliest restart
  Best* win = nullptr;
  for (auto& b : best_of) {
    if (b.restart < 0) continue;
    if (!win || b.value.compare(win->value) < 0 ||
        (b.value.compare(win->value) == 0 && b.restart < win->restart))
      win = &b;
  }
  require_structure(win != nullptr, "no restart produced a drawing");

  CrSolution sol;
  sol.value = win->value;
  sol.drawing = std::move(win->drawing);
  sol.exact = false;
  sol.nodes_explored = std::uint64_t(restarts);
  return sol;
}

}  // namespace crosskit
