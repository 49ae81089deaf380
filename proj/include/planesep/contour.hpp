#pragma once

#include <span>
#include <vector>

#include "planesep/graph.hpp"

namespace planesep {

/// A sequence of darts, each starting where the previous one ends. A closed
/// walk also returns from the last dart's head to the first dart's origin.
struct Walk {
  std::vector<DartId> darts;
  bool closed = false;

  std::size_t size() const { return darts.size(); }
  bool empty() const { return darts.empty(); }
};

/// Converts a vertex sequence into a walk. For closed walks the edge from the
/// last vertex back to the first is implied; a repeated final vertex equal to
/// the first one is dropped. Throws InputError on non-adjacent neighbours.
Walk walk_from_vertices(const PlanarEmbeddedGraph& g, std::span<const VertexId> vertices, bool closed);

/// Origins of the walk's darts (for an open walk, followed by the final head).
std::vector<VertexId> walk_vertices(const PlanarEmbeddedGraph& g, const Walk& w);

bool is_valid_walk(const PlanarEmbeddedGraph& g, const Walk& w);

/// Boundary walk of the unbounded complement component U of the induced ball
/// B(center, radius), i.e. the parametrised contour of the ball.
///
/// `walk.darts[i]` leaves `sequence[i]`. Every vertex at distance exactly
/// `radius` that appears on the walk gets one canonical position: its first
/// appearance, counting from the smallest dart id of the walk (position 0).
struct ContourParametrization {
  VertexId center = kNoVertex;
  int radius = 0;
  Walk walk;
  std::vector<VertexId> sequence;
  /// Distance-`radius` vertices on the walk, ordered by canonical position.
  std::vector<VertexId> sphere_vertices;
  /// `canonical_positions[i]` is the canonical position of `sphere_vertices[i]`.
  std::vector<int> canonical_positions;
  /// Per walk position: true iff it is the canonical occurrence of its vertex.
  std::vector<char> is_canonical;

  int length() const { return static_cast<int>(sequence.size()); }
  /// Sorted vertex support (just {center} when radius is 0).
  std::vector<VertexId> support() const;
  /// Canonical position of u, or -1.
  int canonical_position_of(VertexId u) const;
};

/// Requires B(v, r) to avoid the horizon; throws PreconditionError otherwise.
ContourParametrization contour(const PlanarEmbeddedGraph& g, VertexId v, int r);

/// Faces of the host, as darts in traversal order.
std::vector<std::vector<DartId>> faces(const PlanarEmbeddedGraph& g);

}  // namespace planesep
