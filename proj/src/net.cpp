#include "planesep/net.hpp"

#include <algorithm>
#include <stdexcept>

#include "planesep/bfs.hpp"

namespace planesep {

Net epsilon_net(const PlanarEmbeddedGraph& g, std::span<const VertexId> source, int epsilon, ScanOrder order) {
  if (source.empty()) throw PreconditionError("epsilon_net: empty source set");
  if (epsilon < 0) throw PreconditionError("epsilon_net: epsilon must be nonnegative");
  Net net;
  net.epsilon = epsilon;
  net.source.assign(source.begin(), source.end());
  std::sort(net.source.begin(), net.source.end());
  net.source.erase(std::unique(net.source.begin(), net.source.end()), net.source.end());

  std::vector<VertexId> scan = net.source;
  if (order == ScanOrder::descending_id) std::reverse(scan.begin(), scan.end());

  // A candidate is admissible iff no chosen point lies within epsilon, i.e.
  // iff it is not covered by the epsilon-balls of the points chosen so far.
  std::vector<char> covered(g.num_vertices(), 0);
  BfsWorkspace ws(g);
  for (VertexId u : scan) {
    if (covered[u]) continue;
    net.points.push_back(u);
    ws.run(u, epsilon);
    for (VertexId w : ws.visited()) covered[w] = 1;
  }
  return net;
}

NetCheck check_net(const PlanarEmbeddedGraph& g, const Net& net) {
  NetCheck check;
  const std::vector<char> is_point = to_mask(g.num_vertices(), net.points);
  BfsWorkspace ws(g);
  for (VertexId p : net.points) {
    ws.run(p, net.epsilon);
    for (VertexId w : ws.visited())
      if (w != p && is_point[w]) check.separated = false;
  }
  for (VertexId s : net.source) {
    ws.run(s, net.epsilon);
    bool near_point = false;
    for (VertexId w : ws.visited())
      if (is_point[w]) near_point = true;
    if (!near_point) check.covering = false;
    // A non-point source vertex with no point within epsilon could be added.
    if (!is_point[s] && !near_point) check.maximal = false;
  }
  if (std::any_of(net.points.begin(), net.points.end(),
                  [&](VertexId p) { return !std::binary_search(net.source.begin(), net.source.end(), p); }))
    check.maximal = false;
  return check;
}

int ComponentGraph::index_of(VertexId u) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
  if (it == vertices.end() || *it != u) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<VertexId> ComponentGraph::component_vertices(VertexId u) const {
  const int i = index_of(u);
  if (i < 0) throw std::invalid_argument("vertex not in component graph");
  std::vector<VertexId> out;
  for (std::size_t j = 0; j < vertices.size(); ++j)
    if (component[j] == component[i]) out.push_back(vertices[j]);
  return out;
}

std::vector<VertexId> ComponentGraph::path(VertexId from, VertexId to, bool descending) const {
  const int s = index_of(from);
  const int t = index_of(to);
  if (s < 0 || t < 0 || component[s] != component[t])
    throw std::invalid_argument("component graph path between different components");
  std::vector<int> pred(vertices.size(), -2);
  std::vector<int> queue{s};
  pred[s] = -1;
  for (std::size_t head = 0; head < queue.size() && pred[t] == -2; ++head) {
    const int x = queue[head];
    const auto& nb = adjacency[x];
    auto visit = [&](int y) {
      if (pred[y] == -2) {
        pred[y] = x;
        queue.push_back(y);
      }
    };
    if (descending)
      std::for_each(nb.rbegin(), nb.rend(), visit);
    else
      std::for_each(nb.begin(), nb.end(), visit);
  }
  std::vector<VertexId> out;
  for (int x = t; x != -1; x = pred[x]) out.push_back(vertices[x]);
  std::reverse(out.begin(), out.end());
  return out;
}

ComponentGraph build_component_graph(const PlanarEmbeddedGraph& g, std::span<const VertexId> vertices, int threshold) {
  ComponentGraph cg;
  cg.threshold = threshold;
  cg.vertices.assign(vertices.begin(), vertices.end());
  std::sort(cg.vertices.begin(), cg.vertices.end());
  cg.vertices.erase(std::unique(cg.vertices.begin(), cg.vertices.end()), cg.vertices.end());
  const int k = static_cast<int>(cg.vertices.size());
  cg.adjacency.assign(k, {});

  BfsWorkspace ws(g);
  for (int i = 0; i < k; ++i) {
    ws.run(cg.vertices[i], threshold);
    for (int j = i + 1; j < k; ++j) {
      if (ws.reached(cg.vertices[j])) {
        cg.edges.emplace_back(i, j);
        cg.adjacency[i].push_back(j);
        cg.adjacency[j].push_back(i);
      }
    }
  }
  for (auto& nb : cg.adjacency) std::sort(nb.begin(), nb.end());

  cg.component.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    if (cg.component[i] != -1) continue;
    std::vector<int> stack{i};
    cg.component[i] = cg.num_components;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : cg.adjacency[x]) {
        if (cg.component[y] == -1) {
          cg.component[y] = cg.num_components;
          stack.push_back(y);
        }
      }
    }
    ++cg.num_components;
  }
  return cg;
}

}  // namespace planesep
