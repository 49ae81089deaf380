#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "planesep/generators.hpp"
#include "planesep/graph.hpp"

namespace planesep {

/// Canonical JSON text of the host:
///   {"vertices": [0, 1, ...],
///    "rotations": {"0": [ccw neighbours], "1": [...], ...},
///    "outer_face_dart": [origin, head]}
/// Keys and vertex lists appear in ascending id order, so identical hosts
/// always serialise to identical bytes.
std::string write_graph(const PlanarEmbeddedGraph& g);

/// Parses and validates the JSON format above. Vertex ids must be exactly
/// 0..N-1. Errors are InputError messages naming the offending JSON location.
PlanarEmbeddedGraph read_graph(std::string_view text);

PlanarEmbeddedGraph load_graph_file(const std::string& path);
void save_text_file(const std::string& path, std::string_view text);
std::string load_text_file(const std::string& path);

/// One corpus instance with its measured doubling constant and growth exponent.
struct ManifestEntry {
  std::string file;
  FamilySpec spec;
  VertexId center = kNoVertex;
  int vertices = 0;
  double c_hat = 0.0;
  double d_hat = 0.0;
  bool excluded = false;
  std::string reason;
};

std::string write_manifest(const std::vector<ManifestEntry>& entries);

}  // namespace planesep
