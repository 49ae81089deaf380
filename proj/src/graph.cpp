#include "planesep/graph.hpp"

#include <algorithm>
#include <string>

namespace planesep {

namespace {

std::string at(VertexId v, std::size_t i) {
  return "rotation of vertex " + std::to_string(v) + ", entry " + std::to_string(i);
}

}  // namespace

PlanarEmbeddedGraph PlanarEmbeddedGraph::from_rotations(
    std::vector<std::vector<VertexId>> rotations, std::pair<VertexId, VertexId> outer_face_dart) {
  const auto n = static_cast<VertexId>(rotations.size());
  if (n < 2) throw InputError("graph needs at least two vertices and one edge");

  PlanarEmbeddedGraph g;
  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = rotations[v];
    if (rot.empty()) throw InputError(at(v, 0) + ": isolated vertex (graph must be connected)");
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const VertexId w = rot[i];
      if (w < 0 || w >= n) throw InputError(at(v, i) + ": neighbor " + std::to_string(w) + " is not a vertex");
      if (w == v) throw InputError(at(v, i) + ": self-loop");
    }
    std::vector<VertexId> sorted = rot;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
      throw InputError("rotation of vertex " + std::to_string(v) + ": neighbor " + std::to_string(*dup) +
                       " listed twice");
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<DartId>(rot.size());
  }

  const DartId m = g.offsets_[n];
  g.heads_.resize(m);
  g.origins_.resize(m);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rotations[v].size(); ++i) {
      g.heads_[g.offsets_[v] + static_cast<DartId>(i)] = rotations[v][i];
      g.origins_[g.offsets_[v] + static_cast<DartId>(i)] = v;
    }
  }

  g.twins_.assign(m, kNoDart);
  for (DartId d = 0; d < m; ++d) {
    const DartId t = g.dart_between(g.heads_[d], g.origins_[d]);
    if (t == kNoDart) {
      const VertexId v = g.origins_[d];
      throw InputError(at(v, static_cast<std::size_t>(d - g.offsets_[v])) + ": edge to " +
                       std::to_string(g.heads_[d]) + " has no reverse entry");
    }
    g.twins_[d] = t;
  }

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw InputError("graph is not connected");

  g.build_faces();
  const long euler = static_cast<long>(n) - g.num_edges() + g.num_faces();
  if (euler != 2) {
    throw InputError("rotation system is not planar: V - E + F = " + std::to_string(n) + " - " +
                     std::to_string(g.num_edges()) + " + " + std::to_string(g.num_faces()) + " = " +
                     std::to_string(euler) + ", expected 2");
  }

  const DartId od = g.dart_between(outer_face_dart.first, outer_face_dart.second);
  if (!g.contains(outer_face_dart.first) || od == kNoDart)
    throw InputError("outer_face_dart [" + std::to_string(outer_face_dart.first) + ", " +
                     std::to_string(outer_face_dart.second) + "] is not a dart of the graph");
  g.outer_dart_ = outer_face_dart;
  g.outer_face_ = g.face_of_[od];
  g.build_horizon();
  return g;
}

DartId PlanarEmbeddedGraph::dart_between(VertexId u, VertexId w) const {
  if (!contains(u)) return kNoDart;
  for (DartId d = offsets_[u]; d < offsets_[u + 1]; ++d)
    if (heads_[d] == w) return d;
  return kNoDart;
}

void PlanarEmbeddedGraph::build_faces() {
  const DartId m = num_darts();
  face_of_.assign(m, -1);
  face_darts_.clear();
  face_darts_.reserve(m);
  face_offsets_.assign(1, 0);
  FaceId f = 0;
  for (DartId start = 0; start < m; ++start) {
    if (face_of_[start] != -1) continue;
    DartId d = start;
    do {
      face_of_[d] = f;
      face_darts_.push_back(d);
      d = face_next(d);
    } while (d != start);
    face_offsets_.push_back(static_cast<DartId>(face_darts_.size()));
    ++f;
  }
}

void PlanarEmbeddedGraph::build_horizon() {
  const int n = num_vertices();
  on_outer_.assign(n, 0);
  for (DartId d : face_darts(outer_face_)) on_outer_[origins_[d]] = 1;
  std::vector<char> is_cut(n, 0);
  for (VertexId c : cut_vertices(*this)) is_cut[c] = 1;
  horizon_.assign(n, 0);
  horizon_list_.clear();
  for (VertexId v = 0; v < n; ++v) {
    if (on_outer_[v] && !is_cut[v]) {
      horizon_[v] = 1;
      horizon_list_.push_back(v);
    }
  }
}

std::vector<std::vector<VertexId>> PlanarEmbeddedGraph::rotations() const {
  std::vector<std::vector<VertexId>> out(num_vertices());
  for (VertexId v = 0; v < num_vertices(); ++v) {
    auto nb = neighbors(v);
    out[v].assign(nb.begin(), nb.end());
  }
  return out;
}

std::vector<VertexId> cut_vertices(const PlanarEmbeddedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<int> next_index(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  const VertexId root = 0;
  int root_children = 0;

  std::vector<VertexId> stack{root};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    auto nb = g.neighbors(u);
    if (next_index[u] < static_cast<int>(nb.size())) {
      const VertexId w = nb[next_index[u]++];
      if (disc[w] == -1) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == root) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      stack.pop_back();
      const VertexId p = parent[u];
      if (p != kNoVertex) {
        low[p] = std::min(low[p], low[u]);
        if (p != root && low[u] >= disc[p]) is_cut[p] = 1;
      }
    }
  }
  if (root_children > 1) is_cut[root] = 1;

  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

}  // namespace planesep
