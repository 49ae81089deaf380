#include "planesep/render.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace planesep {

std::vector<Point> tutte_layout(const PlanarEmbeddedGraph& g) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> outer;
  std::vector<char> fixed(n, 0);
  for (DartId d : g.face_darts(g.outer_face())) {
    const VertexId u = g.origin(d);
    if (!fixed[u]) {
      fixed[u] = 1;
      outer.push_back(u);
    }
  }
  if (outer.size() < 3) throw InputError("layout: outer face has fewer than 3 distinct vertices, nothing to draw");

  std::vector<Point> pos(n);
  // Outer face is traced counterclockwise, so placing in walk order keeps orientation.
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(outer.size());
    pos[outer[i]] = {std::cos(a), std::sin(a)};
  }
  std::vector<int> index(n, -1);
  int m = 0;
  for (VertexId u = 0; u < n; ++u)
    if (!fixed[u]) index[u] = m++;
  if (m == 0) return pos;

  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
  for (VertexId u = 0; u < n; ++u) {
    if (fixed[u]) continue;
    trip.emplace_back(index[u], index[u], static_cast<double>(g.degree(u)));
    for (VertexId w : g.neighbors(u)) {
      if (fixed[w]) {
        bx[index[u]] += pos[w].x;
        by[index[u]] += pos[w].y;
      } else {
        trip.emplace_back(index[u], index[w], -1.0);
      }
    }
  }
  Eigen::SparseMatrix<double> L(m, m);
  L.setFromTriplets(trip.begin(), trip.end());
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
  cg.setTolerance(1e-10);
  cg.compute(L);
  const Eigen::VectorXd x = cg.solve(bx);
  const Eigen::VectorXd y = cg.solve(by);
  if (cg.info() != Eigen::Success) throw InputError("layout: barycentric system did not converge");
  for (VertexId u = 0; u < n; ++u)
    if (!fixed[u]) pos[u] = {x[index[u]], y[index[u]]};
  return pos;
}

namespace {

struct Frame {
  double min_x, min_y, scale;
  double px(const Point& p) const { return 20 + (p.x - min_x) * scale; }
  // SVG y grows downwards.
  double py(const Point& p, double height) const { return height - 20 - (p.y - min_y) * scale; }
};

std::string num(double x) {
  if (std::abs(x) < 5e-4) x = 0;  // no "-0.000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string render_svg(const PlanarEmbeddedGraph& g, const Overlays& overlays, const std::vector<Point>& layout) {
  const std::vector<Point> pos = layout.empty() ? tutte_layout(g) : layout;
  if (pos.size() != static_cast<std::size_t>(g.num_vertices()))
    throw InputError("layout: expected one point per vertex");

  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  for (const auto& p : pos) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = 960.0 / span;
  const Frame f{min_x, min_y, scale};
  const double width = 40 + (max_x - min_x) * scale;
  const double height = 40 + (max_y - min_y) * scale;
  const double radius = std::clamp(scale * span / (8.0 * std::sqrt(static_cast<double>(g.num_vertices()))), 0.5, 6.0);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  out += "<g id=\"edges\" stroke=\"#999999\" stroke-width=\"1\">\n";
  for (DartId d = 0; d < g.num_darts(); ++d) {
    if (g.edge_of(d) != d) continue;
    const Point& a = pos[g.origin(d)];
    const Point& b = pos[g.head(d)];
    out += "<line x1=\"" + num(f.px(a)) + "\" y1=\"" + num(f.py(a, height)) + "\" x2=\"" + num(f.px(b)) +
           "\" y2=\"" + num(f.py(b, height)) + "\"/>\n";
  }
  out += "</g>\n";

  auto dots = [&](const char* id, const char* colour, const std::vector<VertexId>& verts, double r) {
    out += std::string("<g id=\"") + id + "\" fill=\"" + colour + "\">\n";
    for (VertexId u : verts)
      out += "<circle cx=\"" + num(f.px(pos[u])) + "\" cy=\"" + num(f.py(pos[u], height)) + "\" r=\"" + num(r) +
             "\"/>\n";
    out += "</g>\n";
  };
  auto polyline = [&](const std::vector<VertexId>& verts, bool closed) {
    out += closed ? "<polygon points=\"" : "<polyline points=\"";
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (i) out += ' ';
      out += num(f.px(pos[verts[i]])) + "," + num(f.py(pos[verts[i]], height));
    }
    out += "\"/>\n";
  };

  std::vector<VertexId> all(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) all[u] = u;
  dots("vertices", "#333333", all, radius);

  if (!overlays.ball.empty()) dots("ball", "#9ecae1", overlays.ball, radius * 1.2);
  if (!overlays.omega.empty()) dots("omega", "#31a354", overlays.omega, radius * 1.2);
  if (!overlays.contour.empty()) {
    out += "<g id=\"contour\" fill=\"none\" stroke=\"#3182bd\" stroke-width=\"2\">\n";
    polyline(overlays.contour, true);
    out += "</g>\n";
  }
  if (!overlays.curve.empty()) {
    out += "<g id=\"curve\" fill=\"none\" stroke=\"#e6550d\" stroke-width=\"2\">\n";
    for (const auto& p : overlays.curve) polyline(p, false);
    out += "</g>\n";
  }
  if (!overlays.boundary.empty()) dots("boundary", "#de2d26", overlays.boundary, radius * 1.5);
  out += "</svg>\n";
  return out;
}

}  // namespace planesep
