#pragma once

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "planesep/contour.hpp"
#include "planesep/graph.hpp"

namespace planesep {

/// A simple curve from `anchor` to the outer face. It leaves the anchor
/// through the face corner between `start_corner` and `rot_next(start_corner)`,
/// then crosses `crossed_edges` (edge ids) one after another, passing through
/// the distinct faces listed in `faces` (faces.size() == crossed_edges.size() + 1,
/// faces.back() is the outer face).
struct DualRay {
  VertexId anchor = kNoVertex;
  DartId start_corner = kNoDart;
  std::vector<DartId> crossed_edges;
  std::vector<FaceId> faces;
};

/// Face containing the corner between d and rot_next(d).
inline FaceId corner_face(const PlanarEmbeddedGraph& g, DartId d) { return g.face_of(g.twin(d)); }

/// Shortest face path from a corner of v to the outer face. Ties go to the
/// smallest dart id. Throws PreconditionError when v is a horizon vertex.
DualRay dual_ray(const PlanarEmbeddedGraph& g, VertexId v);

/// A uniformly seeded random valid ray: random start corner, randomised
/// depth-first face path. Used to check that parity does not depend on the ray.
DualRay random_dual_ray(const PlanarEmbeddedGraph& g, VertexId v, std::mt19937_64& rng);

/// Checks the DualRay invariants; returns false on any violation.
bool is_valid_ray(const PlanarEmbeddedGraph& g, const DualRay& ray);

/// Whether a passage through the anchor, arriving on `in` and leaving on
/// `out`, sweeps over the ray's start corner. The passage is pushed off the
/// anchor across the corners met when turning counterclockwise from
/// twin(in) to out (a full turn when they coincide).
bool passage_covers(const PlanarEmbeddedGraph& g, DartId in, DartId out, DartId corner);

/// Winding number mod 2 of a closed walk around the ray's anchor: edge
/// crossings with the ray plus anchor passages sweeping the start corner.
int winding_parity(const PlanarEmbeddedGraph& g, const Walk& w, const DualRay& ray);

/// Same, for a closed walk given by its vertex sequence.
int winding_parity(const PlanarEmbeddedGraph& g, std::span<const VertexId> closed_walk, const DualRay& ray);

/// Parities of first+reverse(delta) and second+reverse(delta), where
/// `first`, `second` and `delta` are vertex paths sharing both endpoints.
/// Their sum is the parity of first+reverse(second). Throws InputError on
/// an endpoint mismatch.
std::pair<int, int> splice_parity_check(const PlanarEmbeddedGraph& g, std::span<const VertexId> first,
                                        std::span<const VertexId> second, std::span<const VertexId> delta,
                                        const DualRay& ray);

/// Closed vertex walk `path` followed by `back` reversed; both run from the
/// same start to the same end. Shared endpoints appear once.
std::vector<VertexId> close_with(std::span<const VertexId> path, std::span<const VertexId> back);

}  // namespace planesep
