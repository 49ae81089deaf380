#include "planesep/winding.hpp"

#include <algorithm>
#include <string>

namespace planesep {

namespace {

void require_ray_anchor(const PlanarEmbeddedGraph& g, VertexId v) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (g.is_horizon(v)) throw PreconditionError("horizon violated: vertex " + std::to_string(v) + " is on the horizon");
}

// Rebuilds the ray from a predecessor table over faces.
DualRay assemble(const PlanarEmbeddedGraph& g, VertexId v, DartId corner, FaceId target,
                 const std::vector<DartId>& via) {
  DualRay ray;
  ray.anchor = v;
  ray.start_corner = corner;
  FaceId f = target;
  ray.faces.push_back(f);
  while (via[f] != kNoDart) {
    const DartId d = via[f];  // d lies in f, twin(d) in the previous face
    ray.crossed_edges.push_back(g.edge_of(d));
    f = g.face_of(g.twin(d));
    ray.faces.push_back(f);
  }
  std::reverse(ray.faces.begin(), ray.faces.end());
  std::reverse(ray.crossed_edges.begin(), ray.crossed_edges.end());
  return ray;
}

}  // namespace

DualRay dual_ray(const PlanarEmbeddedGraph& g, VertexId v) {
  require_ray_anchor(g, v);
  const int nf = g.num_faces();
  std::vector<DartId> via(nf, kNoDart);
  std::vector<DartId> root_corner(nf, kNoDart);
  std::vector<char> seen(nf, 0);
  std::vector<FaceId> queue;
  for (DartId d = g.first_dart(v); d < g.first_dart(v) + g.degree(v); ++d) {
    const FaceId f = corner_face(g, d);
    if (!seen[f]) {
      seen[f] = 1;
      root_corner[f] = d;
      queue.push_back(f);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const FaceId f = queue[head];
    if (f == g.outer_face()) break;
    // Face darts are visited in increasing id order for determinism.
    auto span = g.face_darts(f);
    std::vector<DartId> darts(span.begin(), span.end());
    std::sort(darts.begin(), darts.end());
    for (DartId d : darts) {
      const FaceId h = g.face_of(g.twin(d));
      if (!seen[h]) {
        seen[h] = 1;
        via[h] = g.twin(d);
        root_corner[h] = root_corner[f];
        queue.push_back(h);
      }
    }
  }
  const FaceId outer = g.outer_face();
  if (!seen[outer]) throw std::logic_error("outer face unreachable in the dual graph");
  return assemble(g, v, root_corner[outer], outer, via);
}

DualRay random_dual_ray(const PlanarEmbeddedGraph& g, VertexId v, std::mt19937_64& rng) {
  require_ray_anchor(g, v);
  const DartId corner = g.first_dart(v) + static_cast<DartId>(rng() % static_cast<unsigned>(g.degree(v)));
  const int nf = g.num_faces();
  std::vector<DartId> via(nf, kNoDart);
  std::vector<char> seen(nf, 0);
  // Randomised depth-first search; the tree path to the outer face is simple.
  std::vector<FaceId> stack{corner_face(g, corner)};
  seen[stack.back()] = 1;
  while (!stack.empty()) {
    const FaceId f = stack.back();
    if (f == g.outer_face()) break;
    auto span = g.face_darts(f);
    std::vector<DartId> options;
    for (DartId d : span)
      if (!seen[g.face_of(g.twin(d))]) options.push_back(d);
    if (options.empty()) {
      stack.pop_back();
      continue;
    }
    const DartId d = options[rng() % options.size()];
    const FaceId h = g.face_of(g.twin(d));
    seen[h] = 1;
    via[h] = g.twin(d);
    stack.push_back(h);
  }
  return assemble(g, v, corner, g.outer_face(), via);
}

bool is_valid_ray(const PlanarEmbeddedGraph& g, const DualRay& ray) {
  if (!g.contains(ray.anchor) || ray.start_corner < 0 || ray.start_corner >= g.num_darts()) return false;
  if (g.origin(ray.start_corner) != ray.anchor) return false;
  if (ray.faces.size() != ray.crossed_edges.size() + 1) return false;
  if (ray.faces.front() != corner_face(g, ray.start_corner) || ray.faces.back() != g.outer_face()) return false;
  std::vector<FaceId> sorted = ray.faces;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < ray.crossed_edges.size(); ++i) {
    const DartId e = ray.crossed_edges[i];
    const FaceId a = g.face_of(e);
    const FaceId b = g.face_of(g.twin(e));
    const bool links = (a == ray.faces[i] && b == ray.faces[i + 1]) || (b == ray.faces[i] && a == ray.faces[i + 1]);
    if (!links) return false;
  }
  return true;
}

bool passage_covers(const PlanarEmbeddedGraph& g, DartId in, DartId out, DartId corner) {
  DartId x = g.twin(in);
  do {
    if (x == corner) return true;
    x = g.rot_next(x);
  } while (x != out);
  return false;
}

int winding_parity(const PlanarEmbeddedGraph& g, const Walk& w, const DualRay& ray) {
  if (!w.closed) throw InputError("winding parity needs a closed walk");
  if (!is_valid_walk(g, w)) throw InputError("winding parity: darts do not form a walk");
  std::vector<DartId> crossed = ray.crossed_edges;
  std::sort(crossed.begin(), crossed.end());
  int parity = 0;
  const std::size_t len = w.size();
  for (std::size_t i = 0; i < len; ++i) {
    const DartId d = w.darts[i];
    if (std::binary_search(crossed.begin(), crossed.end(), g.edge_of(d))) parity ^= 1;
    if (g.origin(d) == ray.anchor) {
      const DartId in = w.darts[(i + len - 1) % len];
      if (passage_covers(g, in, d, ray.start_corner)) parity ^= 1;
    }
  }
  return parity;
}

int winding_parity(const PlanarEmbeddedGraph& g, std::span<const VertexId> closed_walk, const DualRay& ray) {
  return winding_parity(g, walk_from_vertices(g, closed_walk, true), ray);
}

std::vector<VertexId> close_with(std::span<const VertexId> path, std::span<const VertexId> back) {
  std::vector<VertexId> out(path.begin(), path.end());
  // back runs start..end; append its reversed interior.
  for (std::size_t i = back.size(); i-- > 0;) {
    if (i == back.size() - 1 || i == 0) continue;
    out.push_back(back[i]);
  }
  return out;
}

std::pair<int, int> splice_parity_check(const PlanarEmbeddedGraph& g, std::span<const VertexId> first,
                                        std::span<const VertexId> second, std::span<const VertexId> delta,
                                        const DualRay& ray) {
  if (first.empty() || second.empty() || delta.empty()) throw InputError("splice parity: empty path");
  const bool match = first.front() == second.front() && first.front() == delta.front() &&
                     first.back() == second.back() && first.back() == delta.back();
  if (!match) throw InputError("splice parity: paths do not share both endpoints");
  return {winding_parity(g, close_with(first, delta), ray), winding_parity(g, close_with(second, delta), ray)};
}

}  // namespace planesep
