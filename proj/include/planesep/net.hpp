#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "planesep/graph.hpp"

namespace planesep {

/// A maximal epsilon-separated subset of `source`.
struct Net {
  int epsilon = 0;
  std::vector<VertexId> points;  // in selection order
  std::vector<VertexId> source;  // sorted
};

enum class ScanOrder : std::uint8_t { ascending_id, descending_id };

/// Greedy net: scan the source by id and keep every vertex farther than
/// epsilon from all points kept so far.
Net epsilon_net(const PlanarEmbeddedGraph& g, std::span<const VertexId> source, int epsilon,
                ScanOrder order = ScanOrder::ascending_id);

struct NetCheck {
  bool separated = true;  // pairwise distance > epsilon
  bool maximal = true;    // no source vertex can be added
  bool covering = true;   // every source vertex within epsilon of a point
  bool ok() const { return separated && maximal && covering; }
};

/// Independent check of the three net properties from fresh searches.
NetCheck check_net(const PlanarEmbeddedGraph& g, const Net& net);

/// Proximity graph on a vertex list: i ~ j iff d(vertices[i], vertices[j]) <= threshold.
struct ComponentGraph {
  int threshold = 0;
  std::vector<VertexId> vertices;
  std::vector<std::pair<int, int>> edges;    // index pairs, i < j
  std::vector<std::vector<int>> adjacency;   // sorted
  std::vector<int> component;                // component index per vertex
  int num_components = 0;

  int index_of(VertexId u) const;
  /// Vertices of the component containing u.
  std::vector<VertexId> component_vertices(VertexId u) const;
  /// Breadth-first simple path between two vertices of one component; the
  /// neighbour scan runs in ascending index order unless `descending`.
  std::vector<VertexId> path(VertexId from, VertexId to, bool descending = false) const;
};

/// Builds the proximity graph. Duplicate input vertices are merged; the
/// vertex order is ascending id.
ComponentGraph build_component_graph(const PlanarEmbeddedGraph& g, std::span<const VertexId> vertices, int threshold);

}  // namespace planesep
