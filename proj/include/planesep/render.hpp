#pragma once

#include <string>
#include <vector>

#include "planesep/generators.hpp"
#include "planesep/graph.hpp"

namespace planesep {

/// Vertex sets and vertex paths drawn on top of the host. Layer colours:
///   ball      #9ecae1 filled circles
///   omega     #31a354 filled circles
///   boundary  #de2d26 filled circles
///   contour   #3182bd polyline (closed)
///   curve     #e6550d polylines, one per path
struct Overlays {
  std::vector<VertexId> ball;
  std::vector<VertexId> omega;
  std::vector<VertexId> boundary;
  std::vector<VertexId> contour;
  std::vector<std::vector<VertexId>> curve;
};

/// Tutte barycentric layout: distinct outer-face vertices evenly on the unit
/// circle in walk order, every other vertex at the mean of its neighbours.
/// Throws InputError when the outer face has fewer than 3 distinct vertices.
std::vector<Point> tutte_layout(const PlanarEmbeddedGraph& g);

/// Deterministic SVG: one <line> per edge in group "edges", one <circle> per
/// vertex in group "vertices", then the overlay groups. Coordinates are
/// printed with 3 decimals. `layout` defaults to tutte_layout(g).
std::string render_svg(const PlanarEmbeddedGraph& g, const Overlays& overlays = {},
                       const std::vector<Point>& layout = {});

}  // namespace planesep
