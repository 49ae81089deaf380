#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "planesep/graph.hpp"

namespace planesep {

enum class Family : std::uint8_t { grid, triangular, hexagonal, spider, tree, substitution };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

/// Parameters per family:
///   grid          width x height square lattice (height 1 gives a path)
///   triangular    hexagon-shaped patch of the triangular lattice, `size` = radius
///   hexagonal     width x height brick-wall honeycomb
///   spider        `arms` paths of `length` edges glued at vertex 0
///   tree          complete `branching`-ary tree of depth `depth`
///   substitution  triangle refined `iterations` times with rule `rule`
///                 (0: midpoint split into 4; 1: stellar split, each triangle
///                 refined with probability 1/2 from `seed`)
struct FamilySpec {
  Family family = Family::grid;
  int width = 0;
  int height = 0;
  int size = 0;
  int arms = 0;
  int length = 0;
  int branching = 0;
  int depth = 0;
  int rule = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
};

/// Deterministic in the parameters and seed. Vertex ids are canonical: row-major for
/// lattices, arm-major for spiders, breadth-first for trees. Throws
/// InputError on out-of-range parameters.
PlanarEmbeddedGraph generate(const FamilySpec& spec);

/// Vertex id of the lattice point closest to the middle of the generated host.
VertexId central_vertex(const FamilySpec& spec);

struct Point {
  double x = 0;
  double y = 0;
};

/// Plane graph from a straight-line drawing: rotations sorted by angle, the
/// outer face is the face of largest signed area.
PlanarEmbeddedGraph from_straight_line(const std::vector<Point>& points,
                                       const std::vector<std::pair<VertexId, VertexId>>& edges);

/// The straight-line drawing a lattice family is generated from (grid,
/// triangular, hexagonal, spider, substitution). Empty for trees.
std::vector<Point> family_layout(const FamilySpec& spec);

}  // namespace planesep
