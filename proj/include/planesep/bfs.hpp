#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "planesep/graph.hpp"

namespace planesep {

inline constexpr int kUnreached = -1;

/// Hop distances from one center. `dist[u] == kUnreached` never happens on a
/// validated (connected) host.
struct DistanceField {
  VertexId center = kNoVertex;
  std::vector<int> dist;

  int operator[](VertexId u) const { return dist[u]; }
};

DistanceField bfs_distances(const PlanarEmbeddedGraph& g, VertexId v);

/// Distance from every vertex to the nearest source.
std::vector<int> multi_source_distances(const PlanarEmbeddedGraph& g, std::span<const VertexId> sources);

/// Distance from every vertex to the horizon. A ball B(v, r) avoids the
/// horizon iff `horizon_distances(g)[v] > r`.
std::vector<int> horizon_distances(const PlanarEmbeddedGraph& g);

/// Sorted vertex sets.
std::vector<VertexId> ball(const PlanarEmbeddedGraph& g, VertexId v, int r);
std::vector<VertexId> sphere(const PlanarEmbeddedGraph& g, VertexId v, int r);

/// External vertex boundary: vertices outside `omega` with a neighbour inside.
std::vector<VertexId> boundary(const PlanarEmbeddedGraph& g, std::span<const VertexId> omega);

/// Which neighbour wins when several predecessors lie on shortest paths.
enum class PathTieBreak : std::uint8_t { smallest_id, largest_id };

/// Canonical geodesic from a to b (inclusive). The path is computed from the
/// smaller endpoint id, walking back from the larger one and always stepping
/// to the preferred-id predecessor, so `geodesic(a, b)` is exactly the
/// reverse of `geodesic(b, a)`.
std::vector<VertexId> geodesic(const PlanarEmbeddedGraph& g, VertexId a, VertexId b,
                               PathTieBreak tie = PathTieBreak::smallest_id);

int distance(const PlanarEmbeddedGraph& g, VertexId a, VertexId b);

/// Connected component of `v` in the graph with `removed` vertices deleted.
/// Returns the sorted component (empty when v itself is removed).
std::vector<VertexId> component_avoiding(const PlanarEmbeddedGraph& g, VertexId v,
                                         const std::vector<char>& removed);

std::vector<char> to_mask(int n, std::span<const VertexId> vertices);

/// Radius-limited BFS with O(visited) reset cost, for the many small
/// searches of the cutset construction.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const PlanarEmbeddedGraph& g);

  /// Explores everything within `radius` of the sources (radius < 0: no
  /// limit). When `stop_at` is given, exploration halts once it is labelled.
  void run(std::span<const VertexId> sources, int radius, VertexId stop_at = kNoVertex);
  void run(VertexId source, int radius, VertexId stop_at = kNoVertex) {
    run(std::span<const VertexId>(&source, 1), radius, stop_at);
  }

  bool reached(VertexId u) const { return stamp_[u] == epoch_; }
  int dist(VertexId u) const { return reached(u) ? dist_[u] : kUnreached; }
  /// Vertices in discovery order.
  const std::vector<VertexId>& visited() const { return order_; }

  /// Walks back from `target` to a source along preferred-id predecessors.
  /// Returns target..source.
  std::vector<VertexId> backtrack(VertexId target, PathTieBreak tie) const;

 private:
  const PlanarEmbeddedGraph* g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<int> dist_;
  std::vector<VertexId> order_;
  std::uint32_t epoch_ = 0;
};

}  // namespace planesep
