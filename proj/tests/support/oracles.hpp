#pragma once

// Independent reference computations shared by the unit and acceptance
// tests. Nothing here calls the library routine it is used to check.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "planesep/generators.hpp"
#include "planesep/graph.hpp"

namespace oracle {

using planesep::DartId;
using planesep::FamilySpec;
using planesep::PlanarEmbeddedGraph;
using planesep::Point;
using planesep::VertexId;

inline FamilySpec grid_spec(int w, int h) {
  FamilySpec s;
  s.family = planesep::Family::grid;
  s.width = w;
  s.height = h;
  return s;
}

inline PlanarEmbeddedGraph grid(int w, int h) { return planesep::generate(grid_spec(w, h)); }

inline FamilySpec triangular_spec(int r) {
  FamilySpec s;
  s.family = planesep::Family::triangular;
  s.size = r;
  return s;
}

inline FamilySpec spider_spec(int arms, int length) {
  FamilySpec s;
  s.family = planesep::Family::spider;
  s.arms = arms;
  s.length = length;
  return s;
}

inline FamilySpec tree_spec(int branching, int depth) {
  FamilySpec s;
  s.family = planesep::Family::tree;
  s.branching = branching;
  s.depth = depth;
  return s;
}

inline FamilySpec hexagonal_spec(int w, int h) {
  FamilySpec s;
  s.family = planesep::Family::hexagonal;
  s.width = w;
  s.height = h;
  return s;
}

// Relaxes every edge until nothing changes (Bellman-Ford on unit weights).
inline std::vector<int> naive_distances(const PlanarEmbeddedGraph& g, VertexId v) {
  const int inf = 1 << 29;
  std::vector<int> d(g.num_vertices(), inf);
  d[v] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (DartId e = 0; e < g.num_darts(); ++e) {
      const VertexId a = g.origin(e), b = g.head(e);
      if (d[a] + 1 < d[b]) {
        d[b] = d[a] + 1;
        changed = true;
      }
    }
  }
  return d;
}

// A lattice with random interior edges deleted. Deletions that would break
// validation (e.g. disconnect the host) are skipped. Rotations stay those
// of the straight-line drawing, so `layout` still draws the result.
struct Diluted {
  PlanarEmbeddedGraph g;
  std::vector<Point> layout;
  VertexId center;
};

inline Diluted diluted_lattice(const FamilySpec& spec, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const PlanarEmbeddedGraph g0 = planesep::generate(spec);
  auto rot = g0.rotations();
  for (DartId d = 0; d < g0.num_darts(); ++d) {
    if (g0.edge_of(d) != d) continue;
    const VertexId a = g0.origin(d), b = g0.head(d);
    if (g0.on_outer_face(a) || g0.on_outer_face(b) || coin(rng) >= p) continue;
    if (rot[a].size() <= 1 || rot[b].size() <= 1) continue;
    auto ra = rot[a], rb = rot[b];
    rot[a].erase(std::find(rot[a].begin(), rot[a].end(), b));
    rot[b].erase(std::find(rot[b].begin(), rot[b].end(), a));
    try {
      (void)PlanarEmbeddedGraph::from_rotations(rot, g0.outer_face_dart());
    } catch (const planesep::InputError&) {
      rot[a] = std::move(ra);
      rot[b] = std::move(rb);
    }
  }
  return {PlanarEmbeddedGraph::from_rotations(rot, g0.outer_face_dart()), planesep::family_layout(spec),
          planesep::central_vertex(spec)};
}

// Support of the contour of B(v, r) from the definition: faces are merged
// whenever they share a vertex outside the ball; U is the class of the outer
// face; the support is every ball vertex incident to a face of U.
inline std::vector<VertexId> contour_support(const PlanarEmbeddedGraph& g, VertexId v, int r) {
  const auto d = naive_distances(g, v);
  const int nf = g.num_faces();
  std::vector<int> parent(nf);
  for (int f = 0; f < nf; ++f) parent[f] = f;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (d[u] <= r) continue;
    const DartId first = g.first_dart(u);
    for (DartId e = first; e < first + g.degree(u); ++e) parent[find(g.face_of(e))] = find(g.face_of(first));
  }
  const int outer = find(g.outer_face());
  std::vector<VertexId> out;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (d[u] > r) continue;
    const DartId first = g.first_dart(u);
    for (DartId e = first; e < first + g.degree(u); ++e)
      if (find(g.face_of(e)) == outer) {
        out.push_back(u);
        break;
      }
  }
  if (out.empty()) out.push_back(v);
  return out;
}

// Winding parity by ray casting on a straight-line drawing. Passages through
// v are pushed onto a small circle around v, turning counterclockwise from
// the incoming edge to the outgoing one (a full turn when they coincide).
inline int geometric_parity(const PlanarEmbeddedGraph& g, const std::vector<Point>& pos,
                            const std::vector<VertexId>& closed, VertexId v, double ray_angle) {
  const Point c = pos[v];
  double min_edge = 1e300;
  for (DartId e = 0; e < g.num_darts(); ++e)
    min_edge = std::min(min_edge, std::hypot(pos[g.head(e)].x - pos[g.origin(e)].x, pos[g.head(e)].y - pos[g.origin(e)].y));
  const double eps = min_edge * 1e-3;
  auto dir = [&](VertexId w) { return std::atan2(pos[w].y - c.y, pos[w].x - c.x); };

  std::vector<Point> poly;
  const std::size_t k = closed.size();
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId u = closed[i];
    if (u != v) {
      poly.push_back(pos[u]);
      continue;
    }
    const double from = dir(closed[(i + k - 1) % k]);
    double to = dir(closed[(i + 1) % k]);
    while (to <= from + 1e-12) to += 2 * std::numbers::pi;
    const int steps = 64;
    for (int s = 0; s <= steps; ++s) {
      const double t = from + (to - from) * s / steps;
      poly.push_back({c.x + eps * std::cos(t), c.y + eps * std::sin(t)});
    }
  }
  const double dx = std::cos(ray_angle), dy = std::sin(ray_angle);
  int crossings = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    // Solve c + t*(dx,dy) = p + s*(q-p), t > 0, s in [0,1).
    const double ex = q.x - p.x, ey = q.y - p.y;
    const double den = dx * (-ey) - dy * (-ex);
    if (std::abs(den) < 1e-15) continue;
    const double rx = p.x - c.x, ry = p.y - c.y;
    const double t = (rx * (-ey) - ry * (-ex)) / den;
    const double s = (dx * ry - dy * rx) / den;
    if (t > 0 && s >= 0 && s < 1) ++crossings;
  }
  return crossings & 1;
}

// Random closed walk: a random walk of `steps` steps from `start`, closed by
// the shortest way back. Vertices with `blocked[u]` are never entered.
inline std::vector<VertexId> random_closed_walk(const PlanarEmbeddedGraph& g, VertexId start, int steps,
                                                const std::vector<char>& blocked, std::mt19937_64& rng) {
  std::vector<VertexId> walk{start};
  VertexId x = start;
  for (int i = 0; i < steps; ++i) {
    std::vector<VertexId> options;
    for (VertexId w : g.neighbors(x))
      if (!blocked[w]) options.push_back(w);
    if (options.empty()) break;
    x = options[rng() % options.size()];
    walk.push_back(x);
  }
  // Back to start by BFS avoiding blocked vertices.
  std::vector<VertexId> prev(g.num_vertices(), planesep::kNoVertex);
  std::vector<VertexId> q{x};
  prev[x] = x;
  for (std::size_t h = 0; h < q.size() && prev[start] == planesep::kNoVertex; ++h)
    for (VertexId w : g.neighbors(q[h]))
      if (!blocked[w] && prev[w] == planesep::kNoVertex) {
        prev[w] = q[h];
        q.push_back(w);
      }
  std::vector<VertexId> chain;  // start .. x
  for (VertexId u = start; u != x; u = prev[u]) chain.push_back(u);
  // Closed walks imply the final edge back to start, so only the interior is appended.
  for (std::size_t i = chain.size(); i-- > 1;) walk.push_back(chain[i]);
  return walk;
}

// Domain clauses recomputed from oracle distances: B(v,n) inside Omega,
// Omega connected, boundary inside B(v,6n), Omega away from the horizon and
// the boundary within `bound`. Returns an empty string or the first failure.
inline std::string check_domain(const PlanarEmbeddedGraph& g, VertexId v, int n, const std::vector<VertexId>& omega,
                                long long bound) {
  const auto d = naive_distances(g, v);
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId u : omega) in[u] = 1;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (d[u] <= n && !in[u]) return "ball vertex " + std::to_string(u) + " missing";
    if (in[u] && g.is_horizon(u)) return "horizon vertex " + std::to_string(u) + " in omega";
  }
  std::vector<VertexId> stack{v};
  std::vector<char> seen(g.num_vertices(), 0);
  seen[v] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId w : g.neighbors(u))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  if (reached != omega.size()) return "omega not connected";
  long long bd = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (in[u]) continue;
    bool touches = false;
    for (VertexId w : g.neighbors(u)) touches = touches || in[w];
    if (!touches) continue;
    ++bd;
    if (d[u] > 6 * n) return "boundary vertex " + std::to_string(u) + " beyond 6n";
  }
  if (bd > bound) return "boundary " + std::to_string(bd) + " over " + std::to_string(bound);
  return "";
}

// Boundary size of a vertex set.
inline long long boundary_size(const PlanarEmbeddedGraph& g, const std::vector<VertexId>& omega) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId u : omega) in[u] = 1;
  long long bd = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (in[u]) continue;
    for (VertexId w : g.neighbors(u))
      if (in[w]) {
        ++bd;
        break;
      }
  }
  return bd;
}

// Plain queue BFS limited to radius r; returns the distance map of visited vertices.
inline std::vector<std::pair<VertexId, int>> bfs_within(const PlanarEmbeddedGraph& g, VertexId src, int r) {
  std::vector<std::pair<VertexId, int>> out{{src, 0}};
  std::vector<char> seen(g.num_vertices(), 0);
  seen[src] = 1;
  for (std::size_t h = 0; h < out.size(); ++h) {
    const auto [u, d] = out[h];
    if (d == r) continue;
    for (VertexId w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back({w, d + 1});
      }
  }
  return out;
}

// Exact isoperimetric profile by recursive subset enumeration:
// best[k] = min boundary over sets of size exactly k.
inline std::vector<int> exact_boundary_by_size(const PlanarEmbeddedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> best(n + 1, 1 << 29);
  std::vector<char> in(n, 0);
  auto bd = [&] {
    int c = 0;
    for (VertexId u = 0; u < n; ++u) {
      if (in[u]) continue;
      for (VertexId w : g.neighbors(u))
        if (in[w]) {
          ++c;
          break;
        }
    }
    return c;
  };
  auto rec = [&](auto&& self, int i, int size) -> void {
    if (i == n) {
      if (size > 0) best[size] = std::min(best[size], bd());
      return;
    }
    self(self, i + 1, size);
    in[i] = 1;
    self(self, i + 1, size + 1);
    in[i] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace oracle
