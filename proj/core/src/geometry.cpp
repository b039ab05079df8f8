#include "crosskit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "crosskit/util.hpp"

namespace crosskit {

namespace {

// signed doubled area of the triangle a, b, c with a coarse error bound; the
// sign is only trusted when the magnitude clears the bound
struct Orient {
  double value;
  bool certain;
};

Orient orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  double l = (b.x - a.x) * (c.y - a.y);
  double r = (b.y - a.y) * (c.x - a.x);
  double det = l - r;
  double bound = 8.0 * 1e-16 * (std::fabs(l) + std::fabs(r));
  return {det, std::fabs(det) > bound};
}

// whether segments ab and cd properly cross; certain=false means the test
// hit a near-degenerate configuration and the points need a perturbation
struct CrossTest {
  bool crosses;
  bool certain;
};

CrossTest segments_cross(const Vec2& a, const Vec2& b, const Vec2& c,
                         const Vec2& d) {
  Orient o1 = orient(a, b, c);
  Orient o2 = orient(a, b, d);
  Orient o3 = orient(c, d, a);
  Orient o4 = orient(c, d, b);
  if (!o1.certain || !o2.certain || !o3.certain || !o4.certain)
    return {false, false};
  bool cross = (o1.value > 0) != (o2.value > 0) && (o3.value > 0) != (o4.value > 0);
  return {cross, true};
}

bool has_duplicates(const std::vector<Vec2>& pts) {
  std::vector<std::pair<double, double>> s;
  s.reserve(pts.size());
  for (const Vec2& p : pts) s.emplace_back(p.x, p.y);
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

std::vector<Vec2> perturbed(const std::vector<Vec2>& pts, int attempt) {
  double spread = 1.0;
  for (const Vec2& p : pts)
    spread = std::max({spread, std::fabs(p.x), std::fabs(p.y)});
  double amp = spread * 1e-9 * std::pow(10.0, attempt);
  Rng rng = Rng::stream(0x6e05u, std::uint64_t(attempt));
  std::vector<Vec2> out = pts;
  for (Vec2& p : out) {
    p.x += amp * (2.0 * rng.u01() - 1.0);
    p.y += amp * (2.0 * rng.u01() - 1.0);
  }
  return out;
}

// one counting pass; fails (returns false) on any uncertain orientation
bool count_pass(const std::vector<Vec2>& pts, const WeightedGraph& g,
                double* total) {
  const auto& es = g.edges();
  double sum = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto& e = es[i];
      const auto& f = es[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      CrossTest t =
          segments_cross(pts[std::size_t(e.u)], pts[std::size_t(e.v)],
                         pts[std::size_t(f.u)], pts[std::size_t(f.v)]);
      if (!t.certain) return false;
      if (t.crosses) sum += e.w.value() * f.w.value();
    }
  *total = sum;
  return true;
}

// general-position preparation shared by the counting and drawing entries
std::vector<Vec2> prepared(std::vector<Vec2> points, const WeightedGraph& g,
                           double* total) {
  require(int(points.size()) == g.vertex_count(),
          "one point per graph vertex");
  constexpr int kAttempts = 5;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Vec2> pts = attempt == 0 ? points : perturbed(points, attempt);
    if (has_duplicates(pts)) continue;
    if (count_pass(pts, g, total)) return pts;
  }
  throw domain_error("point set is degenerate even after perturbation");
}

}  // namespace

double straight_line_crossings(std::vector<Vec2> points, const WeightedGraph& g) {
  double total = 0;
  prepared(std::move(points), g, &total);
  return total;
}

GeometricDrawing straight_line_drawing(std::vector<Vec2> points,
                                       const WeightedGraph& g) {
  double total = 0;
  GeometricDrawing out;
  out.points = prepared(std::move(points), g, &total);
  out.polylines.reserve(std::size_t(g.edge_count()));
  for (const auto& e : g.edges())
    out.polylines.push_back(
        {out.points[std::size_t(e.u)], out.points[std::size_t(e.v)]});
  return out;
}

}  // namespace crosskit
