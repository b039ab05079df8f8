#include "crosskit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "crosskit/plane_graph.hpp"
#include "crosskit/util.hpp"

namespace crosskit {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return std::string(buf);
}

// barycentric layout of one component: pin the longest face on a circle,
// relax everything else to the neighbor average
void layout_component(const PlaneGraph& m, const std::vector<int>& nodes,
                      std::vector<Vec2>* pos) {
  if (nodes.size() == 1) {
    (*pos)[std::size_t(nodes[0])] = {0.5, 0.5};
    return;
  }

  // outer face: longest orbit among the component's faces (ties: lowest id)
  std::map<int, int> orbit_len;
  for (int v : nodes)
    for (int f : m.faces_at(v)) orbit_len.emplace(f, int(m.face_darts(f).size()));
  int outer = -1, best = -1;
  for (auto [f, len] : orbit_len)
    if (len > best) best = len, outer = f;

  std::vector<char> pinned(std::size_t(m.node_count()), 0);
  std::vector<int> ring;  // boundary nodes, first visit order
  for (int d : m.face_darts(outer)) {
    int v = m.from(d);
    if (!pinned[std::size_t(v)]) {
      pinned[std::size_t(v)] = 1;
      ring.push_back(v);
    }
  }
  const double pi = 3.14159265358979323846;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    double a = 2.0 * pi * double(i) / double(ring.size());
    (*pos)[std::size_t(ring[i])] = {0.5 + 0.45 * std::cos(a),
                                    0.5 + 0.45 * std::sin(a)};
  }
  for (int v : nodes)
    if (!pinned[std::size_t(v)]) (*pos)[std::size_t(v)] = {0.5, 0.5};

  // Gauss-Seidel relaxation of the interior
  for (int round = 0; round < 60 * int(nodes.size()) + 200; ++round) {
    double moved = 0;
    for (int v : nodes) {
      if (pinned[std::size_t(v)] || m.isolated(v)) continue;
      double sx = 0, sy = 0;
      int k = 0;
      for (int d : m.darts_out(v)) {
        const Vec2& q = (*pos)[std::size_t(m.to(d))];
        sx += q.x;
        sy += q.y;
        ++k;
      }
      Vec2& p = (*pos)[std::size_t(v)];
      double nx = sx / k, ny = sy / k;
      moved = std::max({moved, std::fabs(nx - p.x), std::fabs(ny - p.y)});
      p = {nx, ny};
    }
    if (moved < 1e-9) break;
  }
}

}  // namespace

std::string render_svg(const Drawing& d) {
  const PlaneGraph& m = d.map();
  const int n = d.graph().vertex_count();

  std::vector<int> comp = m.node_count() > 0 ? m.components() : std::vector<int>();
  std::map<int, std::vector<int>> groups;  // component id -> live nodes
  for (int v = 0; v < m.node_count(); ++v)
    if (m.node_alive(v)) groups[comp[std::size_t(v)]].push_back(v);

  // per-component unit cells, offset horizontally
  std::vector<Vec2> pos(std::size_t(std::max(m.node_count(), 1)));
  double dx = 0;
  for (auto& [c, nodes] : groups) {
    layout_component(m, nodes, &pos);
    for (int v : nodes) pos[std::size_t(v)].x += dx;
    dx += 1.1;
  }
  double width = groups.empty() ? 1.0 : dx - 0.1;

  const double s = 100.0;  // world-to-canvas scale
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                    num(width * s) + " " + num(1.0 * s) + "\">\n";

  for (int e = 0; e < d.graph().edge_count(); ++e) {
    if (!d.drawn(e)) continue;
    int u = d.graph().edges()[std::size_t(e)].u;
    int v = d.graph().edges()[std::size_t(e)].v;
    std::string pts = num(pos[std::size_t(u)].x * s) + "," +
                      num(pos[std::size_t(u)].y * s);
    for (int x : m.chain_dummies(e, u))
      pts += " " + num(pos[std::size_t(x)].x * s) + "," +
             num(pos[std::size_t(x)].y * s);
    pts += " " + num(pos[std::size_t(v)].x * s) + "," +
           num(pos[std::size_t(v)].y * s);
    out += "  <polyline class=\"edge\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"1\" points=\"" +
           pts + "\"/>\n";
  }

  for (int v = 0; v < n; ++v) {
    if (!m.node_alive(v)) continue;
    out += "  <circle class=\"vertex\" r=\"4\" fill=\"steelblue\" cx=\"" +
           num(pos[std::size_t(v)].x * s) + "\" cy=\"" +
           num(pos[std::size_t(v)].y * s) + "\"/>\n";
  }
  for (int v = n; v < m.node_count(); ++v) {
    if (!m.node_alive(v) || !m.is_dummy(v)) continue;
    out += "  <circle class=\"crossing\" r=\"2\" fill=\"crimson\" cx=\"" +
           num(pos[std::size_t(v)].x * s) + "\" cy=\"" +
           num(pos[std::size_t(v)].y * s) + "\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

std::string render_svg(const GeometricDrawing& gd) {
  double lo_x = 0, lo_y = 0, hi_x = 1, hi_y = 1;
  bool first = true;
  auto stretch = [&](const Vec2& p) {
    if (first) {
      lo_x = hi_x = p.x;
      lo_y = hi_y = p.y;
      first = false;
    } else {
      lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
    }
  };
  for (const Vec2& p : gd.points) stretch(p);
  for (const auto& line : gd.polylines)
    for (const Vec2& p : line) stretch(p);
  double pad = 0.05 * std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  lo_x -= pad, lo_y -= pad, hi_x += pad, hi_y += pad;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
                    num(lo_x) + " " + num(lo_y) + " " + num(hi_x - lo_x) + " " +
                    num(hi_y - lo_y) + "\">\n";
  double sw = (hi_x - lo_x) / 200.0;
  for (const auto& line : gd.polylines) {
    std::string pts;
    for (const Vec2& p : line)
      pts += (pts.empty() ? "" : " ") + num(p.x) + "," + num(p.y);
    out += "  <polyline class=\"edge\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"" +
           num(sw) + "\" points=\"" + pts + "\"/>\n";
  }
  for (const Vec2& p : gd.points)
    out += "  <circle class=\"vertex\" r=\"" + num(2 * sw) +
           "\" fill=\"steelblue\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
           "\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace crosskit
