#include "planesep/contour.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "planesep/bfs.hpp"

namespace planesep {

Walk walk_from_vertices(const PlanarEmbeddedGraph& g, std::span<const VertexId> vertices, bool closed) {
  Walk w;
  w.closed = closed;
  std::size_t count = vertices.size();
  if (closed && count > 1 && vertices.front() == vertices.back()) --count;
  if (count <= 1) return w;
  const std::size_t steps = closed ? count : count - 1;
  w.darts.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const VertexId u = vertices[i];
    const VertexId x = vertices[(i + 1) % count];
    const DartId d = g.dart_between(u, x);
    if (d == kNoDart)
      throw InputError("walk step " + std::to_string(i) + ": " + std::to_string(u) + " and " + std::to_string(x) +
                       " are not adjacent");
    w.darts.push_back(d);
  }
  return w;
}

std::vector<VertexId> walk_vertices(const PlanarEmbeddedGraph& g, const Walk& w) {
  std::vector<VertexId> out;
  out.reserve(w.size() + 1);
  for (DartId d : w.darts) out.push_back(g.origin(d));
  if (!w.closed && !w.empty()) out.push_back(g.head(w.darts.back()));
  return out;
}

bool is_valid_walk(const PlanarEmbeddedGraph& g, const Walk& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (g.head(w.darts[i]) != g.origin(w.darts[i + 1])) return false;
  if (w.closed && !w.empty() && g.head(w.darts.back()) != g.origin(w.darts.front())) return false;
  return true;
}

std::vector<VertexId> ContourParametrization::support() const {
  if (sequence.empty()) return {center};
  std::vector<VertexId> out = sequence;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int ContourParametrization::canonical_position_of(VertexId u) const {
  for (std::size_t i = 0; i < sphere_vertices.size(); ++i)
    if (sphere_vertices[i] == u) return canonical_positions[i];
  return -1;
}

namespace {

// Union-find over host faces.
struct FaceUnion {
  std::vector<FaceId> parent;
  explicit FaceUnion(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  FaceId find(FaceId f) {
    while (parent[f] != f) f = parent[f] = parent[parent[f]];
    return f;
  }
  void unite(FaceId a, FaceId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ContourParametrization contour(const PlanarEmbeddedGraph& g, VertexId v, int r) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (r < 0) throw PreconditionError("contour radius must be nonnegative");
  const std::vector<int> hd = horizon_distances(g);
  if (hd[v] <= r)
    throw PreconditionError("horizon violated: B(" + std::to_string(v) + ", " + std::to_string(r) +
                            ") reaches the horizon (distance to horizon is " + std::to_string(hd[v]) + ")");

  ContourParametrization c;
  c.center = v;
  c.radius = r;
  c.walk.closed = true;
  if (r == 0) return c;

  BfsWorkspace ws(g);
  ws.run(v, r);
  auto in_ball = [&](VertexId u) { return ws.reached(u); };
  auto ball_dart = [&](DartId d) { return in_ball(g.origin(d)) && in_ball(g.head(d)); };

  // Complement components of the ball are unions of host faces glued across
  // edges (and vertices) outside the ball. Only faces touching the ball or
  // reachable from the outer face matter, but a full pass is simplest.
  FaceUnion uf(g.num_faces());
  for (DartId d = 0; d < g.num_darts(); ++d) {
    if (d < g.twin(d) && !ball_dart(d)) uf.unite(g.face_of(d), g.face_of(g.twin(d)));
  }
  const FaceId outer_class = uf.find(g.outer_face());

  // Rotation successor restricted to ball darts.
  auto ball_rot_next = [&](DartId d) {
    DartId e = g.rot_next(d);
    while (!in_ball(g.head(e))) e = g.rot_next(e);
    return e;
  };

  DartId start = kNoDart;
  int expected = 0;
  for (VertexId u : ws.visited()) {
    for (DartId d = g.first_dart(u); d < g.first_dart(u) + g.degree(u); ++d) {
      if (ball_dart(d) && uf.find(g.face_of(d)) == outer_class) {
        ++expected;
        if (start == kNoDart || d < start) start = d;
      }
    }
  }
  if (start == kNoDart) throw PreconditionError("ball has no edge on its unbounded complement component");

  DartId d = start;
  do {
    c.walk.darts.push_back(d);
    c.sequence.push_back(g.origin(d));
    d = ball_rot_next(g.twin(d));
  } while (d != start);
  if (static_cast<int>(c.walk.darts.size()) != expected)
    throw std::logic_error("contour walk does not cover the unbounded component's darts");

  c.is_canonical.assign(c.sequence.size(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  for (int i = 0; i < c.length(); ++i) {
    const VertexId u = c.sequence[i];
    if (ws.dist(u) == r && !seen[u]) {
      seen[u] = 1;
      c.is_canonical[i] = 1;
      c.sphere_vertices.push_back(u);
      c.canonical_positions.push_back(i);
    }
  }
  return c;
}

std::vector<std::vector<DartId>> faces(const PlanarEmbeddedGraph& g) {
  std::vector<std::vector<DartId>> out(g.num_faces());
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    auto darts = g.face_darts(f);
    out[f].assign(darts.begin(), darts.end());
  }
  return out;
}

}  // namespace planesep
