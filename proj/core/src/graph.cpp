#include "crosskit/graph.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "crosskit/util.hpp"

namespace crosskit {

static std::int64_t key_of(int n, int u, int v) { return std::int64_t(u) * n + v; }

void WeightedGraph::add_edge(int u, int v, Weight w) {
  require(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
  require_structure(u != v, "loops are not allowed");
  if (u > v) std::swap(u, v);
  require_structure(!has_edge(u, v), "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  if (w.is_zero()) return;  // zero-weight pairs are simply absent
  edges_.push_back(Edge{u, v, w});
  reindex();
}

void WeightedGraph::set_edge(int u, int v, Weight w) {
  require(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
  require_structure(u != v, "loops are not allowed");
  if (u > v) std::swap(u, v);
  auto it = index_.find(key_of(n_, u, v));
  if (it == index_.end()) {
    if (!w.is_zero()) {
      edges_.push_back(Edge{u, v, w});
      reindex();
    }
    return;
  }
  if (w.is_zero()) {
    edges_.erase(edges_.begin() + it->second);
    reindex();
  } else {
    edges_[it->second].w = w;
  }
}

void WeightedGraph::reindex() {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  index_.clear();
  for (int i = 0; i < (int)edges_.size(); ++i)
    index_[key_of(n_, edges_[i].u, edges_[i].v)] = i;
}

bool WeightedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return index_.count(key_of(n_, u, v)) > 0;
}

Weight WeightedGraph::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = index_.find(key_of(n_, u, v));
  return it == index_.end() ? Weight::zero() : edges_[it->second].w;
}

std::vector<int> WeightedGraph::neighbors(int u) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.u == u) out.push_back(e.v);
    if (e.v == u) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactValue WeightedGraph::pair_mass(const std::vector<int>& s, const std::vector<int>& t) const {
  std::vector<char> in_s(n_, 0), in_t(n_, 0);
  for (int v : s) {
    require(v >= 0 && v < n_, "set member out of range");
    in_s[v] = 1;
  }
  for (int v : t) {
    require(v >= 0 && v < n_, "set member out of range");
    in_t[v] = 1;
  }
  ExactValue total = ExactValue::zero();
  for (const auto& e : edges_) {
    int c = 0;
    if (in_s[e.u] && in_t[e.v]) ++c;
    if (in_s[e.v] && in_t[e.u]) ++c;
    if (c) total = total.plus(ExactValue::from_fraction(int128(e.w.num) * c, e.w.den));
  }
  return total;
}

std::optional<std::int64_t> WeightedGraph::common_denominator() const {
  std::int64_t l = 1;
  for (const auto& e : edges_) {
    std::int64_t g = gcd64(l, e.w.den);
    int128 next = int128(l / g) * e.w.den;
    if (next > 1000000000000000LL) return std::nullopt;
    l = std::int64_t(next);
  }
  return l;
}

bool WeightedGraph::operator==(const WeightedGraph& o) const {
  if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != o.edges_[i].u || edges_[i].v != o.edges_[i].v ||
        !(edges_[i].w == o.edges_[i].w))
      return false;
  }
  return true;
}

// --- partitions ----------------------------------------------------------

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> classes)
    : n_(n), classes_(std::move(classes)) {
  std::vector<char> seen(n, 0);
  for (auto& cls : classes_) {
    require_structure(!cls.empty(), "empty partition class");
    std::sort(cls.begin(), cls.end());
    for (int v : cls) {
      require(v >= 0 && v < n, "partition member out of range");
      require_structure(!seen[v], "vertex appears in two classes");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v) require_structure(seen[v], "vertex missing from partition");
  std::sort(classes_.begin(), classes_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  class_of_.assign(n, -1);
  for (int i = 0; i < (int)classes_.size(); ++i)
    for (int v : classes_[i]) class_of_[v] = i;
}

VertexPartition VertexPartition::one_class(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return VertexPartition(n, {all});
}

VertexPartition VertexPartition::singletons(int n) {
  std::vector<std::vector<int>> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = {i};
  return VertexPartition(n, std::move(cls));
}

VertexPartition VertexPartition::blowup_classes(int n_base, int m) {
  std::vector<std::vector<int>> cls(n_base);
  for (int u = 0; u < n_base; ++u)
    for (int c = 0; c < m; ++c) cls[u].push_back(u * m + c);
  return VertexPartition(n_base * m, std::move(cls));
}

bool VertexPartition::equitable() const {
  int lo = n_, hi = 0;
  for (const auto& c : classes_) {
    lo = std::min(lo, (int)c.size());
    hi = std::max(hi, (int)c.size());
  }
  return hi - lo <= 1;
}

// --- serialization -------------------------------------------------------

WeightedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  WeightedGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and whitespace-only lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0)
        throw parse_error("line " + std::to_string(lineno) + ": expected vertex count");
      std::string rest;
      if (ls >> rest) throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
      g = WeightedGraph(n);
      continue;
    }
    std::string probe;
    if (!(ls >> probe)) continue;  // blank or comment-only line
    ls.clear();
    ls.seekg(0);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    int u, v;
    if (!(ls >> u)) throw parse_error(where + "expected an edge line 'u v [w]'");
    if (!(ls >> v)) throw parse_error(where + "missing endpoint");
    std::string wtok;
    Weight w = Weight::one();
    if (ls >> wtok) {
      try {
        w = Weight::parse(wtok);
      } catch (const domain_error& e) {
        throw domain_error(where + e.what());
      } catch (const error& e) {
        throw parse_error(where + e.what());
      }
      std::string rest;
      if (ls >> rest) throw parse_error(where + "trailing tokens");
    }
    try {
      g.add_edge(u, v, w);
    } catch (const structure_error& e) {
      throw structure_error(where + e.what());
    } catch (const error& e) {
      throw domain_error(where + e.what());
    }
  }
  if (n < 0) throw parse_error("empty graph document");
  return g;
}

std::string serialize_graph_text(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (const auto& e : g.edges())
    out << e.u << " " << e.v << " " << e.w.decimal() << "\n";
  return out.str();
}

WeightedGraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw parse_error("json graph needs integer field 'n'");
  WeightedGraph g(doc["n"].get<int>());
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw parse_error("'edges' must be an array");
    for (const auto& row : doc["edges"]) {
      if (!row.is_array() || row.size() < 2 || row.size() > 3)
        throw parse_error("edge rows are [u,v] or [u,v,w]");
      int u = row[0].get<int>(), v = row[1].get<int>();
      Weight w = Weight::one();
      if (row.size() == 3) {
        // go through the shortest decimal rendering so 0.3 means 3/10 exactly
        if (row[2].is_number_integer())
          w = Weight(row[2].get<std::int64_t>(), 1);
        else if (row[2].is_number())
          w = Weight::parse(format_double(row[2].get<double>()));
        else if (row[2].is_string())
          w = Weight::parse(row[2].get<std::string>());
        else
          throw parse_error("edge weight must be a number");
      }
      g.add_edge(u, v, w);
    }
  }
  return g;
}

std::string serialize_graph_json(const WeightedGraph& g) {
  std::ostringstream out;
  out << "{\"n\": " << g.vertex_count() << ", \"edges\": [";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) out << ", ";
    first = false;
    out << "[" << e.u << ", " << e.v << ", " << e.w.decimal() << "]";
  }
  out << "]}";
  return out.str();
}

// --- constructions -------------------------------------------------------

WeightedGraph blow_up(const WeightedGraph& g, int m) {
  require(m >= 1, "blow-up factor must be >= 1");
  WeightedGraph out(g.vertex_count() * m);
  for (const auto& e : g.edges())
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) out.add_edge(e.u * m + a, e.v * m + b, e.w);
  return out;
}

QuotientGraph quotient(const WeightedGraph& g, const VertexPartition& p) {
  require_structure(p.vertex_count() == g.vertex_count(), "partition does not match graph");
  int k = p.class_count();
  // accumulate class-pair mass exactly over per-edge fractions
  std::vector<std::vector<ExactValue>> mass(k, std::vector<ExactValue>(k, ExactValue::zero()));
  for (const auto& e : g.edges()) {
    int i = p.class_of(e.u), j = p.class_of(e.v);
    ExactValue w = ExactValue::from_fraction(e.w.num, e.w.den);
    if (i == j) {
      mass[i][i] = mass[i][i].plus(w).plus(w);  // both-endpoints double count
    } else {
      mass[std::min(i, j)][std::max(i, j)] = mass[std::min(i, j)][std::max(i, j)].plus(w);
    }
  }
  QuotientGraph q;
  q.base = WeightedGraph(k);
  q.class_sizes.resize(k);
  q.diagonal.resize(k);
  for (int i = 0; i < k; ++i) q.class_sizes[i] = p.class_size(i);
  for (int i = 0; i < k; ++i) {
    ExactValue d = mass[i][i].scaled(1, std::int64_t(q.class_sizes[i]) * q.class_sizes[i]);
    require(d.exact && d.num >= 0 && d.num <= d.den * 2, "diagonal density out of range");
    // densities stay < 1 for loopless graphs; store reduced
    std::int64_t dn = std::int64_t(d.num), dd = std::int64_t(d.den);
    q.diagonal[i] = Weight(dn, dd);
    for (int j = i + 1; j < k; ++j) {
      ExactValue w = mass[i][j].scaled(1, std::int64_t(q.class_sizes[i]) * q.class_sizes[j]);
      if (w.num == 0) continue;
      require(w.exact && w.num <= w.den, "quotient weight out of range");
      q.base.add_edge(i, j, Weight(std::int64_t(w.num), std::int64_t(w.den)));
    }
  }
  return q;
}

WeightedGraph averaged(const WeightedGraph& g, const VertexPartition& p) {
  QuotientGraph q = quotient(g, p);
  int n = g.vertex_count();
  WeightedGraph out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int i = p.class_of(u), j = p.class_of(v);
      Weight w = (i == j) ? q.diagonal[i] : q.base.weight(std::min(i, j), std::max(i, j));
      if (!w.is_zero()) out.add_edge(u, v, w);
    }
  }
  return out;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  require_structure(std::adjacent_find(vs.begin(), vs.end()) == vs.end(),
                    "duplicate vertex in selection");
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < (int)vs.size(); ++i) {
    require(vs[i] >= 0 && vs[i] < g.vertex_count(), "selection out of range");
    pos[vs[i]] = i;
  }
  WeightedGraph out(int(vs.size()));
  for (const auto& e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0) out.add_edge(pos[e.u], pos[e.v], e.w);
  return out;
}

WeightedGraph random_graph(int n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "edge probability outside [0,1]");
  Rng rng(seed);
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.u01() < p) g.add_edge(u, v, Weight::one());
  return g;
}

WeightedGraph complete_graph(int n) {
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, Weight::one());
  return g;
}

WeightedGraph complete_bipartite(int a, int b) {
  WeightedGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v, Weight::one());
  return g;
}

ExactValue crossing_lower_bound(const WeightedGraph& g) {
  std::int64_t n = g.vertex_count();
  std::int64_t m = g.edge_count();
  ExactValue best = ExactValue::zero();
  if (n >= 3) {
    std::int64_t euler = m - 3 * n + 6;
    if (euler > 0) best = ExactValue::from_fraction(euler, 1);
  }
  if (n >= 1 && m >= 4 * n) {
    ExactValue dense = ExactValue::from_fraction(int128(m) * m * m, 64 * n * n);
    if (dense.compare(best) > 0) best = dense;
  }
  return best;
}

}  // namespace crosskit
