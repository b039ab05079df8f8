#include "crosskit/cutmetric.hpp"

#include <algorithm>
#include <cmath>

namespace crosskit {

namespace {

// Symmetric difference matrix scaled to a common denominator when possible.
struct DiffMatrix {
  int n = 0;
  bool exact = false;
  std::int64_t den = 1;                 // weights are entries/den
  std::vector<std::int64_t> ints;       // n*n, zero diagonal
  std::vector<double> dbls;

  std::int64_t iat(int u, int v) const { return ints[std::size_t(u) * n + v]; }
  double dat(int u, int v) const { return dbls[std::size_t(u) * n + v]; }
};

DiffMatrix build_diff(const WeightedGraph& g1, const WeightedGraph& g2) {
  require(g1.vertex_count() == g2.vertex_count(), "cut distance needs equal vertex sets");
  DiffMatrix d;
  d.n = g1.vertex_count();
  auto d1 = g1.common_denominator(), d2 = g2.common_denominator();
  std::int64_t den = 0;
  if (d1 && d2) {
    std::int64_t g = gcd64(*d1, *d2);
    int128 l = int128(*d1 / g) * *d2;
    if (l <= 1000000000000LL) den = std::int64_t(l);
  }
  d.exact = den > 0;
  d.den = d.exact ? den : 1;
  d.dbls.assign(std::size_t(d.n) * d.n, 0.0);
  if (d.exact) d.ints.assign(std::size_t(d.n) * d.n, 0);
  auto put = [&](int u, int v, const Weight& w, int sign) {
    d.dbls[std::size_t(u) * d.n + v] += sign * w.value();
    d.dbls[std::size_t(v) * d.n + u] += sign * w.value();
    if (d.exact) {
      std::int64_t scaled = w.num * (d.den / w.den) * sign;
      d.ints[std::size_t(u) * d.n + v] += scaled;
      d.ints[std::size_t(v) * d.n + u] += scaled;
    }
  };
  for (const auto& e : g1.edges()) put(e.u, e.v, e.w, +1);
  for (const auto& e : g2.edges()) put(e.u, e.v, e.w, -1);
  return d;
}

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

ExactValue witness_value(const DiffMatrix& d, const std::vector<int>& s,
                         const std::vector<int>& t) {
  if (d.exact) {
    int128 sum = 0;
    for (int u : s)
      for (int v : t)
        if (u != v) sum += d.iat(u, v);
    if (sum < 0) sum = -sum;
    return ExactValue::from_fraction(sum, int128(d.den) * d.n * d.n);
  }
  double sum = 0;
  for (int u : s)
    for (int v : t)
      if (u != v) sum += d.dat(u, v);
  return ExactValue::from_double(std::fabs(sum) / (double(d.n) * d.n));
}

}  // namespace

CutWitness cut_distance_exact(const WeightedGraph& g1, const WeightedGraph& g2,
                              int vertex_limit) {
  DiffMatrix d = build_diff(g1, g2);
  int n = d.n;
  require(n <= vertex_limit && n <= 30,
          "exact cut search limited to " + std::to_string(vertex_limit) + " vertices");
  if (n == 0) return CutWitness{{}, {}, ExactValue::zero()};

  // Gray-code scan over S; per vertex v keep rowsum(v) = sum_{u in S, u != v} diff(u,v).
  // Optimal T for fixed S is the strictly-positive (or strictly-negative) rows.
  const bool exact = d.exact;
  std::vector<std::int64_t> rs_i(n, 0);
  std::vector<double> rs_d(n, 0.0);
  std::int64_t pos_i = 0, neg_i = 0;
  double pos_d = 0, neg_d = 0;
  std::uint32_t smask = 0;
  std::int64_t best_i = -1;
  double best_d = -1;
  std::uint32_t best_smask = 0;
  bool best_neg = false;
  bool have_best = false;
  std::vector<int> best_s, best_t;

  auto consider = [&](std::int64_t vi, double vd, bool negside) {
    bool better, equal;
    if (exact) {
      better = vi > best_i;
      equal = vi == best_i;
    } else {
      better = vd > best_d + 1e-12;
      equal = std::fabs(vd - best_d) <= 1e-12;
    }
    if (!have_best || better) {
      best_i = vi;
      best_d = vd;
      best_smask = smask;
      best_neg = negside;
      have_best = true;
      best_s = mask_to_set(smask, n);
      best_t.clear();
      for (int v = 0; v < n; ++v) {
        bool take = exact ? (negside ? rs_i[v] < 0 : rs_i[v] > 0)
                          : (negside ? rs_d[v] < 0 : rs_d[v] > 0);
        if (take) best_t.push_back(v);
      }
      return;
    }
    if (equal) {
      std::vector<int> cand_s = mask_to_set(smask, n);
      std::vector<int> cand_t;
      for (int v = 0; v < n; ++v) {
        bool take = exact ? (negside ? rs_i[v] < 0 : rs_i[v] > 0)
                          : (negside ? rs_d[v] < 0 : rs_d[v] > 0);
        if (take) cand_t.push_back(v);
      }
      if (cand_s < best_s || (cand_s == best_s && cand_t < best_t)) {
        best_smask = smask;
        best_neg = negside;
        best_s = std::move(cand_s);
        best_t = std::move(cand_t);
      }
    }
  };

  consider(0, 0.0, false);  // S = empty
  std::uint64_t total = 1ULL << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    std::uint32_t gray = std::uint32_t(i ^ (i >> 1));
    std::uint32_t flip = gray ^ smask;
    int x = __builtin_ctz(flip);
    bool entering = (gray >> x) & 1;
    smask = gray;
    if (exact) {
      const std::int64_t* row = &d.ints[std::size_t(x) * n];
      for (int v = 0; v < n; ++v) {
        if (v == x || row[v] == 0) continue;
        std::int64_t old = rs_i[v];
        std::int64_t nw = entering ? old + row[v] : old - row[v];
        rs_i[v] = nw;
        if (old > 0) pos_i -= old;
        if (old < 0) neg_i -= -old;
        if (nw > 0) pos_i += nw;
        if (nw < 0) neg_i += -nw;
      }
      consider(pos_i, 0.0, false);
      consider(neg_i, 0.0, true);
    } else {
      const double* row = &d.dbls[std::size_t(x) * n];
      for (int v = 0; v < n; ++v) {
        if (v == x || row[v] == 0.0) continue;
        double old = rs_d[v];
        double nw = entering ? old + row[v] : old - row[v];
        rs_d[v] = nw;
        if (old > 0) pos_d -= old;
        if (old < 0) neg_d -= -old;
        if (nw > 0) pos_d += nw;
        if (nw < 0) neg_d += -nw;
      }
      consider(0, pos_d, false);
      consider(0, neg_d, true);
    }
  }
  (void)best_neg;
  (void)best_smask;
  CutWitness w;
  w.s = best_s;
  w.t = best_t;
  w.value = exact ? ExactValue::from_fraction(best_i, int128(d.den) * n * n)
                  : ExactValue::from_double(best_d / (double(n) * n));
  return w;
}

CutWitness cut_distance_heuristic(const WeightedGraph& g1, const WeightedGraph& g2,
                                  int restarts, std::uint64_t seed) {
  DiffMatrix d = build_diff(g1, g2);
  int n = d.n;
  if (n == 0) return CutWitness{{}, {}, ExactValue::zero()};
  require(restarts >= 1, "need at least one restart");

  CutWitness best;
  best.value = ExactValue::from_fraction(-1, 1);  // below anything

  std::vector<char> in_s(n, 0);
  std::vector<double> rowsum(n, 0.0);
  for (int r = 0; r < restarts; ++r) {
    Rng rng = Rng::stream(seed, std::uint64_t(r));
    if (r == 0)
      std::fill(in_s.begin(), in_s.end(), 1);  // S = V first: catches global-mass witnesses
    else
      for (int v = 0; v < n; ++v) in_s[v] = rng.u01() < 0.5 ? 1 : 0;
    for (int sign : {+1, -1}) {
      std::vector<char> s = in_s, t(n, 0);
      for (int iter = 0; iter < 200; ++iter) {
        // T step: strictly improving rows
        for (int v = 0; v < n; ++v) {
          double sum = 0;
          for (int u = 0; u < n; ++u)
            if (s[u] && u != v) sum += d.dat(u, v);
          t[v] = sign * sum > 0 ? 1 : 0;
        }
        // S step against fixed T (matrix is symmetric)
        std::vector<char> ns(n, 0);
        for (int u = 0; u < n; ++u) {
          double sum = 0;
          for (int v = 0; v < n; ++v)
            if (t[v] && v != u) sum += d.dat(u, v);
          ns[u] = sign * sum > 0 ? 1 : 0;
        }
        if (ns == s) break;
        s = ns;
      }
      std::vector<int> sv, tv;
      for (int v = 0; v < n; ++v) {
        if (s[v]) sv.push_back(v);
        if (t[v]) tv.push_back(v);
      }
      ExactValue val = witness_value(d, sv, tv);
      int cmp = val.compare(best.value);
      if (cmp > 0 || (cmp == 0 && (sv < best.s || (sv == best.s && tv < best.t)))) {
        best.s = sv;
        best.t = tv;
        best.value = val;
      }
    }
  }
  (void)rowsum;
  if (best.value.compare(ExactValue::zero()) < 0) best.value = ExactValue::zero();
  return best;
}

double partition_index(const WeightedGraph& g, const VertexPartition& p) {
  QuotientGraph q = quotient(g, p);
  int k = p.class_count();
  double n = g.vertex_count();
  double idx = 0;
  for (int i = 0; i < k; ++i) {
    double dii = q.diagonal[i].value();
    idx += dii * dii * double(q.class_sizes[i]) * q.class_sizes[i] / (n * n);
    for (int j = i + 1; j < k; ++j) {
      double w = q.base.weight(i, j).value();
      idx += 2.0 * w * w * double(q.class_sizes[i]) * q.class_sizes[j] / (n * n);
    }
  }
  return idx;
}

namespace {

// 4-way split of every class by the witness (S, T); returns nullopt if nothing splits.
std::optional<VertexPartition> split_by_witness(const VertexPartition& p,
                                                const std::vector<int>& s,
                                                const std::vector<int>& t) {
  int n = p.vertex_count();
  std::vector<char> in_s(n, 0), in_t(n, 0);
  for (int v : s) in_s[v] = 1;
  for (int v : t) in_t[v] = 1;
  std::vector<std::vector<int>> out;
  bool changed = false;
  for (const auto& cls : p.classes()) {
    std::vector<int> part[4];
    for (int v : cls) {
      int which = in_s[v] ? (in_t[v] ? 0 : 1) : (in_t[v] ? 2 : 3);
      part[which].push_back(v);
    }
    int nonempty = 0;
    for (auto& q : part)
      if (!q.empty()) ++nonempty;
    if (nonempty > 1) changed = true;
    for (auto& q : part)
      if (!q.empty()) out.push_back(std::move(q));
  }
  if (!changed) return std::nullopt;
  return VertexPartition(n, std::move(out));
}

VertexPartition bisect_all(const VertexPartition& p) {
  std::vector<std::vector<int>> out;
  for (const auto& cls : p.classes()) {
    if (cls.size() <= 1) {
      out.push_back(cls);
      continue;
    }
    std::size_t half = (cls.size() + 1) / 2;
    out.emplace_back(cls.begin(), cls.begin() + half);
    out.emplace_back(cls.begin() + half, cls.end());
  }
  return VertexPartition(p.vertex_count(), std::move(out));
}

// Move as few vertices as possible so class sizes differ by at most one.
// Surplus leaves from the back (largest members), deficits fill in canonical
// class order with the pooled vertices ascending.
VertexPartition rebalance_equitable(const VertexPartition& p) {
  if (p.equitable()) return p;
  int n = p.vertex_count(), k = p.class_count();
  int q = n / k, r = n % k;
  std::vector<std::vector<int>> cls = p.classes();
  // big targets go to the currently-largest classes (stable on canonical order)
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cls[a].size() > cls[b].size();
  });
  std::vector<int> target(k, q);
  for (int i = 0; i < r; ++i) target[order[i]] = q + 1;
  std::vector<int> pool;
  for (int i = 0; i < k; ++i) {
    while ((int)cls[i].size() > target[i]) {
      pool.push_back(cls[i].back());
      cls[i].pop_back();
    }
  }
  std::sort(pool.begin(), pool.end());
  std::size_t next = 0;
  for (int i = 0; i < k; ++i) {
    while ((int)cls[i].size() < target[i]) {
      cls[i].push_back(pool[next++]);
    }
  }
  return VertexPartition(n, std::move(cls));
}

}  // namespace

RegularityCheck verify_regularity(const WeightedGraph& g, const VertexPartition& p,
                                  double epsilon, int exact_limit, int heuristic_restarts,
                                  std::uint64_t seed) {
  WeightedGraph avg = averaged(g, p);
  RegularityCheck out;
  if (g.vertex_count() <= exact_limit) {
    out.witness = cut_distance_exact(g, avg, exact_limit);
    out.certified = true;
  } else {
    out.witness = cut_distance_heuristic(g, avg, heuristic_restarts, seed);
    out.certified = false;
  }
  out.ok = out.witness.value.approx <= epsilon + 1e-12;
  return out;
}

RegularityReport fk_partition(const WeightedGraph& g, const FkOptions& opt) {
  require(opt.epsilon > 0, "epsilon must be positive");
  require(opt.min_classes >= 1 && opt.min_classes <= std::max(1, opt.max_classes),
          "min_classes must lie in [1, max_classes]");
  int n = g.vertex_count();
  RegularityReport rep;
  rep.epsilon = opt.epsilon;
  rep.status = "certified";
  VertexPartition p = VertexPartition::one_class(std::max(n, 1));
  if (n == 0) {
    rep.partition = VertexPartition();
    rep.defect = ExactValue::zero();
    return rep;
  }
  int min_classes = std::min(opt.min_classes, n);
  for (int iter = 0;; ++iter) {
    RegularityCheck chk = verify_regularity(g, p, opt.epsilon, opt.exact_limit,
                                            opt.heuristic_restarts,
                                            splitmix64(opt.seed) + std::uint64_t(iter));
    rep.partition = p;
    rep.defect = chk.witness.value;
    rep.witness = chk.witness;
    rep.class_count = p.class_count();
    rep.iterations = iter;
    bool want_more = !chk.ok || p.class_count() < min_classes;
    if (!want_more) {
      rep.status = chk.certified ? "certified" : "heuristic";
      return rep;
    }
    if (p.class_count() >= n) {  // singletons: averaged == G, nothing left to split
      rep.status = chk.certified ? "certified" : "heuristic";
      return rep;
    }
    if (iter >= opt.iteration_cap) {
      rep.status = "budget";
      return rep;
    }
    double pre_index = partition_index(g, p);
    auto refined = split_by_witness(p, chk.witness.s, chk.witness.t);
    VertexPartition next = refined ? *refined : bisect_all(p);
    if (next.class_count() > opt.max_classes) {
      rep.status = "budget";
      return rep;
    }
    double split_index = partition_index(g, next);
    next = rebalance_equitable(next);
    double post_index = partition_index(g, next);
    // refinement never lowers the mean-square index; rebalancing may cost a little
    if (split_index + 1e-9 < pre_index)
      throw structure_error("mean-square index decreased under refinement");
    rep.index_history.emplace_back(split_index, post_index);
    p = std::move(next);
  }
}

}  // namespace crosskit
