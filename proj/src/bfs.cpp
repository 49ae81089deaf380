#include "planesep/bfs.hpp"

#include <algorithm>
#include <string>

namespace planesep {

namespace {

void require_vertex(const PlanarEmbeddedGraph& g, VertexId v) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
}

}  // namespace

DistanceField bfs_distances(const PlanarEmbeddedGraph& g, VertexId v) {
  require_vertex(g, v);
  DistanceField field;
  field.center = v;
  field.dist = multi_source_distances(g, std::span<const VertexId>(&v, 1));
  return field;
}

std::vector<int> multi_source_distances(const PlanarEmbeddedGraph& g, std::span<const VertexId> sources) {
  std::vector<int> dist(g.num_vertices(), kUnreached);
  std::vector<VertexId> queue;
  queue.reserve(g.num_vertices());
  for (VertexId s : sources) {
    require_vertex(g, s);
    if (dist[s] == kUnreached) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> horizon_distances(const PlanarEmbeddedGraph& g) {
  return multi_source_distances(g, g.horizon_vertices());
}

std::vector<VertexId> ball(const PlanarEmbeddedGraph& g, VertexId v, int r) {
  require_vertex(g, v);
  if (r < 0) throw PreconditionError("ball radius must be nonnegative");
  BfsWorkspace ws(g);
  ws.run(v, r);
  std::vector<VertexId> out = ws.visited();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> sphere(const PlanarEmbeddedGraph& g, VertexId v, int r) {
  require_vertex(g, v);
  if (r < 0) throw PreconditionError("sphere radius must be nonnegative");
  BfsWorkspace ws(g);
  ws.run(v, r);
  std::vector<VertexId> out;
  for (VertexId u : ws.visited())
    if (ws.dist(u) == r) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> boundary(const PlanarEmbeddedGraph& g, std::span<const VertexId> omega) {
  const std::vector<char> in = to_mask(g.num_vertices(), omega);
  std::vector<char> mark(g.num_vertices(), 0);
  std::vector<VertexId> out;
  for (VertexId u : omega) {
    for (VertexId w : g.neighbors(u)) {
      if (!in[w] && !mark[w]) {
        mark[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> geodesic(const PlanarEmbeddedGraph& g, VertexId a, VertexId b, PathTieBreak tie) {
  require_vertex(g, a);
  require_vertex(g, b);
  if (a == b) return {a};
  const VertexId lo = std::min(a, b);
  const VertexId hi = std::max(a, b);
  BfsWorkspace ws(g);
  ws.run(lo, -1, hi);
  if (!ws.reached(hi))
    throw PreconditionError("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are disconnected");
  std::vector<VertexId> path = ws.backtrack(hi, tie);  // hi .. lo
  if (a == lo) std::reverse(path.begin(), path.end());
  return path;
}

int distance(const PlanarEmbeddedGraph& g, VertexId a, VertexId b) {
  require_vertex(g, a);
  require_vertex(g, b);
  BfsWorkspace ws(g);
  ws.run(a, -1, b);
  return ws.dist(b);
}

std::vector<VertexId> component_avoiding(const PlanarEmbeddedGraph& g, VertexId v,
                                         const std::vector<char>& removed) {
  require_vertex(g, v);
  if (removed[v]) return {};
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> out{v};
  seen[v] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (VertexId w : g.neighbors(out[head])) {
      if (!seen[w] && !removed[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> to_mask(int n, std::span<const VertexId> vertices) {
  std::vector<char> mask(n, 0);
  for (VertexId u : vertices) mask[u] = 1;
  return mask;
}

BfsWorkspace::BfsWorkspace(const PlanarEmbeddedGraph& g)
    : g_(&g), stamp_(g.num_vertices(), 0), dist_(g.num_vertices(), 0) {}

void BfsWorkspace::run(std::span<const VertexId> sources, int radius, VertexId stop_at) {
  ++epoch_;
  if (epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  order_.clear();
  for (VertexId s : sources) {
    if (stamp_[s] != epoch_) {
      stamp_[s] = epoch_;
      dist_[s] = 0;
      order_.push_back(s);
    }
  }
  if (stop_at != kNoVertex && reached(stop_at)) return;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const VertexId u = order_[head];
    if (radius >= 0 && dist_[u] >= radius) continue;
    for (VertexId w : g_->neighbors(u)) {
      if (stamp_[w] != epoch_) {
        stamp_[w] = epoch_;
        dist_[w] = dist_[u] + 1;
        order_.push_back(w);
        if (w == stop_at) return;
      }
    }
  }
}

std::vector<VertexId> BfsWorkspace::backtrack(VertexId target, PathTieBreak tie) const {
  std::vector<VertexId> path{target};
  VertexId x = target;
  while (dist(x) > 0) {
    VertexId best = kNoVertex;
    for (VertexId y : g_->neighbors(x)) {
      if (dist(y) != dist(x) - 1) continue;
      if (best == kNoVertex || (tie == PathTieBreak::smallest_id ? y < best : y > best)) best = y;
    }
    x = best;
    path.push_back(x);
  }
  return path;
}

}  // namespace planesep
