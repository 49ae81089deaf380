#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planesep {

using VertexId = std::int32_t;
using DartId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr DartId kNoDart = -1;

/// Malformed graph data or arguments (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain, e.g. a ball reaching the horizon
/// (CLI exit code 2).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed object failed its independent check (CLI exit code 1).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A connected plane graph given by a rotation system.
///
/// Darts are the directed half-edges. The darts leaving vertex `v` occupy the
/// contiguous id range `[first_dart(v), first_dart(v) + degree(v))` in the
/// counterclockwise order of `v`'s rotation, so `rot_next` is a cyclic step
/// inside that range. Faces are orbits of `face_next(d) = rot_next(twin(d))`;
/// with counterclockwise rotations each face lies to the right of its darts.
///
/// The designated outer face stands in for the point at infinity. Its
/// non-cut vertices form the *horizon*: the place where a finite host was
/// truncated from an infinite graph. Radius-dependent operations require
/// their balls to stay strictly inside the horizon.
///
/// Instances are immutable after construction and safe to share across threads.
class PlanarEmbeddedGraph {
 public:
  /// Builds and validates the embedding. `rotations[v]` lists the neighbours
  /// of `v` in counterclockwise order. Throws InputError when the data is not
  /// a simple connected plane graph (Euler's formula is enforced).
  static PlanarEmbeddedGraph from_rotations(std::vector<std::vector<VertexId>> rotations,
                                            std::pair<VertexId, VertexId> outer_face_dart);

  int num_vertices() const { return static_cast<int>(offsets_.size()) - 1; }
  int num_darts() const { return static_cast<int>(heads_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_faces() const { return static_cast<int>(face_offsets_.size()) - 1; }

  bool contains(VertexId v) const { return v >= 0 && v < num_vertices(); }

  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  DartId first_dart(VertexId v) const { return offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {heads_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }

  VertexId origin(DartId d) const { return origins_[d]; }
  VertexId head(DartId d) const { return heads_[d]; }
  DartId twin(DartId d) const { return twins_[d]; }
  DartId rot_next(DartId d) const {
    const VertexId v = origins_[d];
    return d + 1 == offsets_[v + 1] ? offsets_[v] : d + 1;
  }
  DartId rot_prev(DartId d) const {
    const VertexId v = origins_[d];
    return d == offsets_[v] ? offsets_[v + 1] - 1 : d - 1;
  }
  DartId face_next(DartId d) const { return rot_next(twins_[d]); }

  /// Undirected edge id: the smaller of the two dart ids.
  DartId edge_of(DartId d) const { return d < twins_[d] ? d : twins_[d]; }

  /// Dart from u to w, or kNoDart when they are not adjacent.
  DartId dart_between(VertexId u, VertexId w) const;

  FaceId face_of(DartId d) const { return face_of_[d]; }
  /// Darts of face f in traversal order, starting at the face's smallest dart.
  std::span<const DartId> face_darts(FaceId f) const {
    return {face_darts_.data() + face_offsets_[f],
            static_cast<std::size_t>(face_offsets_[f + 1] - face_offsets_[f])};
  }
  FaceId outer_face() const { return outer_face_; }
  std::pair<VertexId, VertexId> outer_face_dart() const { return outer_dart_; }

  bool on_outer_face(VertexId v) const { return on_outer_[v] != 0; }
  bool is_horizon(VertexId v) const { return horizon_[v] != 0; }
  /// Sorted list of horizon vertices.
  const std::vector<VertexId>& horizon_vertices() const { return horizon_list_; }

  /// The rotation lists this graph was built from.
  std::vector<std::vector<VertexId>> rotations() const;

 private:
  PlanarEmbeddedGraph() = default;
  void build_faces();
  void build_horizon();

  std::vector<DartId> offsets_;
  std::vector<VertexId> heads_;
  std::vector<VertexId> origins_;
  std::vector<DartId> twins_;
  std::vector<FaceId> face_of_;
  std::vector<DartId> face_offsets_;
  std::vector<DartId> face_darts_;
  FaceId outer_face_ = -1;
  std::pair<VertexId, VertexId> outer_dart_{kNoVertex, kNoVertex};
  std::vector<char> on_outer_;
  std::vector<char> horizon_;
  std::vector<VertexId> horizon_list_;
};

/// Articulation points of a connected graph, sorted. Iterative, so deep
/// trees and long paths are fine.
std::vector<VertexId> cut_vertices(const PlanarEmbeddedGraph& g);

}  // namespace planesep
