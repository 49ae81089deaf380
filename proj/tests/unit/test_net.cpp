#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "planesep/bfs.hpp"
#include "planesep/net.hpp"

using namespace planesep;

namespace {

// Net properties from the all-pairs oracle distances.
void check_by_oracle(const PlanarEmbeddedGraph& g, const Net& net) {
  std::vector<std::vector<int>> dist;
  for (VertexId p : net.points) dist.push_back(oracle::naive_distances(g, p));
  for (std::size_t i = 0; i < net.points.size(); ++i)
    for (std::size_t j = i + 1; j < net.points.size(); ++j) CHECK(dist[i][net.points[j]] > net.epsilon);
  for (VertexId s : net.source) {
    int best = 1 << 29;
    for (const auto& d : dist) best = std::min(best, d[s]);
    CHECK(best <= net.epsilon);
  }
}

}  // namespace

TEST_CASE("net of a path") {
  const auto g = oracle::grid(11, 1);
  std::vector<VertexId> all(11);
  for (int i = 0; i < 11; ++i) all[i] = i;
  const auto net = epsilon_net(g, all, 2);
  CHECK(net.points == std::vector<VertexId>{0, 3, 6, 9});
  CHECK(check_net(g, net).ok());
  const auto back = epsilon_net(g, all, 2, ScanOrder::descending_id);
  CHECK(back.points == std::vector<VertexId>{10, 7, 4, 1});
  CHECK(epsilon_net(g, all, 0).points.size() == 11);
}

TEST_CASE("random nets satisfy separation, maximality and covering") {
  std::mt19937_64 rng(2024);
  const auto g = oracle::grid(30, 30);
  const auto h = oracle::diluted_lattice(oracle::triangular_spec(10), 0.35, 4).g;
  for (int t = 0; t < 60; ++t) {
    const auto& host = (t % 2) ? g : h;
    std::vector<VertexId> src;
    for (VertexId u = 0; u < host.num_vertices(); ++u)
      if (rng() % 4 == 0) src.push_back(u);
    if (src.empty()) continue;
    const int eps = 1 + static_cast<int>(rng() % 6);
    const auto net = epsilon_net(host, src, eps, (t % 3) ? ScanOrder::ascending_id : ScanOrder::descending_id);
    CHECK(check_net(host, net).ok());
    check_by_oracle(host, net);
  }
}

TEST_CASE("check_net flags broken nets") {
  const auto g = oracle::grid(11, 1);
  Net net;
  net.epsilon = 2;
  net.source = {0, 1, 2, 3, 4, 5};
  net.points = {0, 2, 5};
  auto c = check_net(g, net);
  CHECK_FALSE(c.separated);
  net.points = {0};
  c = check_net(g, net);
  CHECK_FALSE(c.maximal);
  CHECK_FALSE(c.covering);
}

TEST_CASE("component graph on a path") {
  const auto g = oracle::grid(20, 1);
  const std::vector<VertexId> pts{0, 2, 4, 10, 12, 19, 4};
  const auto cg = build_component_graph(g, pts, 2);
  CHECK(cg.vertices == std::vector<VertexId>{0, 2, 4, 10, 12, 19});
  CHECK(cg.num_components == 3);
  CHECK(cg.component[cg.index_of(0)] == cg.component[cg.index_of(4)]);
  CHECK(cg.component[cg.index_of(10)] != cg.component[cg.index_of(19)]);
  CHECK(cg.component_vertices(12) == std::vector<VertexId>{10, 12});
  CHECK(cg.path(0, 4) == std::vector<VertexId>{0, 2, 4});
  CHECK_THROWS_AS(cg.path(0, 19), std::invalid_argument);
  CHECK(cg.index_of(7) == -1);
  CHECK(cg.edges.size() == 3);
}
