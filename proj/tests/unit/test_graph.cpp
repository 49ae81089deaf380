#include <doctest.h>

#include <numeric>
#include <random>

#include "../support/oracles.hpp"
#include "planesep/bfs.hpp"
#include "planesep/contour.hpp"
#include "planesep/generators.hpp"
#include "planesep/graph.hpp"

using namespace planesep;

namespace {

VertexId at(int w, int x, int y) { return y * w + x; }

}  // namespace

TEST_CASE("grid 3x3 has 9 vertices, 12 edges and 5 faces") {
  const auto g = oracle::grid(3, 3);
  CHECK(g.num_vertices() == 9);
  CHECK(g.num_edges() == 12);
  CHECK(g.num_faces() == 5);
  const auto fs = faces(g);
  std::size_t total = 0;
  for (const auto& f : fs) total += f.size();
  CHECK(total == 24);
  CHECK(g.face_darts(g.outer_face()).size() == 8);
  for (FaceId f = 0; f < g.num_faces(); ++f)
    if (f != g.outer_face()) CHECK(g.face_darts(f).size() == 4);
}

TEST_CASE("triangle and single edge faces") {
  const auto tri = PlanarEmbeddedGraph::from_rotations({{1, 2}, {2, 0}, {0, 1}}, {0, 1});
  CHECK(tri.num_faces() == 2);
  for (FaceId f = 0; f < 2; ++f) CHECK(tri.face_darts(f).size() == 3);

  const auto edge = PlanarEmbeddedGraph::from_rotations({{1}, {0}}, {0, 1});
  CHECK(edge.num_faces() == 1);
  CHECK(edge.face_darts(0).size() == 2);
}

TEST_CASE("every dart lies in exactly one face") {
  for (const auto& spec : {oracle::grid_spec(7, 5), oracle::triangular_spec(4), oracle::spider_spec(5, 3),
                           oracle::tree_spec(3, 3), oracle::hexagonal_spec(6, 6)}) {
    const auto g = generate(spec);
    std::vector<int> hits(g.num_darts(), 0);
    for (const auto& f : faces(g))
      for (DartId d : f) ++hits[d];
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(g.num_vertices() - g.num_edges() + g.num_faces() == 2);
    for (DartId d = 0; d < g.num_darts(); ++d) {
      CHECK(g.twin(g.twin(d)) == d);
      CHECK(g.twin(d) != d);
      CHECK(g.origin(g.rot_next(d)) == g.origin(d));
      CHECK(g.rot_prev(g.rot_next(d)) == d);
    }
  }
}

TEST_CASE("validation rejects malformed rotation systems") {
  SUBCASE("K5 with arbitrary rotations fails the Euler check") {
    std::vector<std::vector<VertexId>> rot(5);
    for (VertexId u = 0; u < 5; ++u)
      for (VertexId w = 0; w < 5; ++w)
        if (u != w) rot[u].push_back(w);
    CHECK_THROWS_AS(PlanarEmbeddedGraph::from_rotations(rot, {0, 1}), InputError);
    try {
      (void)PlanarEmbeddedGraph::from_rotations(rot, {0, 1});
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("V - E + F") != std::string::npos);
    }
  }
  SUBCASE("neighbour that is not an edge") {
    CHECK_THROWS_AS(PlanarEmbeddedGraph::from_rotations({{1, 2}, {0}, {1}}, {0, 1}), InputError);
  }
  SUBCASE("duplicate neighbour and self loop") {
    CHECK_THROWS_AS(PlanarEmbeddedGraph::from_rotations({{1, 1}, {0, 0}}, {0, 1}), InputError);
    CHECK_THROWS_AS(PlanarEmbeddedGraph::from_rotations({{0, 1}, {0}}, {0, 1}), InputError);
  }
  SUBCASE("disconnected") {
    CHECK_THROWS_AS(PlanarEmbeddedGraph::from_rotations({{1}, {0}, {3}, {2}}, {0, 1}), InputError);
  }
  SUBCASE("outer dart that is not a dart") {
    CHECK_THROWS_AS(PlanarEmbeddedGraph::from_rotations({{1}, {0, 2}, {1}}, {0, 2}), InputError);
  }
  SUBCASE("unknown neighbour id") {
    CHECK_THROWS_AS(PlanarEmbeddedGraph::from_rotations({{1}, {0, 7}}, {0, 1}), InputError);
  }
}

TEST_CASE("horizon is the non-cut part of the outer face") {
  const auto g = oracle::grid(5, 5);
  for (VertexId u = 0; u < 25; ++u) {
    const int x = u % 5, y = u / 5;
    CHECK(g.is_horizon(u) == (x == 0 || y == 0 || x == 4 || y == 4));
  }
  const auto spider = generate(oracle::spider_spec(4, 3));
  CHECK(spider.horizon_vertices() == std::vector<VertexId>{3, 6, 9, 12});
  CHECK(horizon_distances(spider)[0] == 3);
}

TEST_CASE("bfs distances on the grid") {
  const auto g = oracle::grid(21, 21);
  const VertexId v = at(21, 10, 10);
  const auto d = bfs_distances(g, v);
  CHECK(d[v] == 0);
  CHECK(d[at(21, 11, 10)] == 1);
  CHECK(d[at(21, 12, 13)] == 5);
  for (DartId e = 0; e < g.num_darts(); ++e) CHECK(std::abs(d[g.origin(e)] - d[g.head(e)]) <= 1);
  CHECK_THROWS_AS(bfs_distances(g, 9999), InputError);
}

TEST_CASE("bfs agrees with a relaxation oracle on small hosts") {
  std::vector<PlanarEmbeddedGraph> hosts;
  for (const auto& spec : {oracle::grid_spec(12, 9), oracle::triangular_spec(6), oracle::hexagonal_spec(10, 8),
                           oracle::spider_spec(6, 8), oracle::tree_spec(2, 6)})
    hosts.push_back(generate(spec));
  for (std::uint64_t s = 0; s < 6; ++s) hosts.push_back(oracle::diluted_lattice(oracle::triangular_spec(8), 0.4, s).g);
  for (const auto& g : hosts) {
    REQUIRE(g.num_vertices() <= 500);
    for (VertexId v = 0; v < g.num_vertices(); v += 7) CHECK(bfs_distances(g, v).dist == oracle::naive_distances(g, v));
  }
}

TEST_CASE("balls, spheres and boundaries on the grid") {
  const auto g = oracle::grid(21, 21);
  const VertexId v = at(21, 10, 10);
  CHECK(ball(g, v, 0) == std::vector<VertexId>{v});
  CHECK(ball(g, v, 1).size() == 5);
  CHECK(sphere(g, v, 1).size() == 4);
  CHECK_THROWS_AS(ball(g, v, -1), PreconditionError);

  const std::vector<VertexId> single{v};
  CHECK(boundary(g, single) == sphere(g, v, 1));
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  CHECK(boundary(g, all).empty());
  const auto b2 = ball(g, v, 2);
  CHECK(boundary(g, b2) == sphere(g, v, 3));
  CHECK(boundary(g, b2).size() == 12);
}

TEST_CASE("interior grid spheres have 4r vertices") {
  const auto g = oracle::grid(101, 101);
  const VertexId v = at(101, 50, 50);
  const auto d = oracle::naive_distances(g, v);
  for (int r = 1; r <= 20; ++r) {
    const auto s = sphere(g, v, r);
    CHECK(static_cast<int>(s.size()) == 4 * r);
    CHECK(std::all_of(s.begin(), s.end(), [&](VertexId u) { return d[u] == r; }));
  }
}

TEST_CASE("geodesics are canonical and symmetric") {
  const auto g = oracle::grid(15, 15);
  const VertexId a = at(15, 2, 3), b = at(15, 9, 11);
  const auto p = geodesic(g, a, b);
  auto q = geodesic(g, b, a);
  std::reverse(q.begin(), q.end());
  CHECK(p == q);
  CHECK(static_cast<int>(p.size()) == distance(g, a, b) + 1);
  CHECK(p.front() == a);
  CHECK(p.back() == b);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.dart_between(p[i], p[i + 1]) != kNoDart);
  CHECK(geodesic(g, a, b, PathTieBreak::largest_id).size() == p.size());
}

TEST_CASE("contour of a star traverses each edge twice") {
  const auto g = generate(oracle::spider_spec(3, 3));
  const auto c = contour(g, 0, 1);
  CHECK(c.length() == 6);
  CHECK(c.walk.closed);
  CHECK(is_valid_walk(g, c.walk));
  CHECK(c.support() == std::vector<VertexId>{0, 1, 4, 7});
  CHECK(c.sphere_vertices.size() == 3);
}

TEST_CASE("contour support matches the complement-component oracle") {
  const auto g = oracle::grid(21, 21);
  const VertexId v = at(21, 10, 10);
  for (int r = 1; r <= 6; ++r) {
    const auto c = contour(g, v, r);
    CHECK(c.support() == oracle::contour_support(g, v, r));
  }
  // r = 1: the ball is a star, so the walk runs around all four spokes.
  const auto c1 = contour(g, v, 1);
  CHECK(c1.length() == 8);
  CHECK(c1.support() == ball(g, v, 1));

  for (std::uint64_t s = 0; s < 8; ++s) {
    const auto h = oracle::diluted_lattice(oracle::grid_spec(25, 25), 0.35, s);
    const int hr = horizon_distances(h.g)[h.center];
    for (int r = 1; r < hr; ++r) CHECK(contour(h.g, h.center, r).support() == oracle::contour_support(h.g, h.center, r));
  }
}

TEST_CASE("contour canonical occurrences") {
  const auto h = oracle::diluted_lattice(oracle::grid_spec(31, 31), 0.4, 3);
  const auto c = contour(h.g, h.center, 8);
  const auto d = bfs_distances(h.g, h.center);
  std::vector<VertexId> on_walk;
  for (int i = 0; i < c.length(); ++i)
    if (d[c.sequence[i]] == 8) on_walk.push_back(c.sequence[i]);
  std::sort(on_walk.begin(), on_walk.end());
  on_walk.erase(std::unique(on_walk.begin(), on_walk.end()), on_walk.end());
  auto sv = c.sphere_vertices;
  std::sort(sv.begin(), sv.end());
  CHECK(sv == on_walk);
  for (std::size_t i = 0; i < c.sphere_vertices.size(); ++i) {
    const int p = c.canonical_positions[i];
    CHECK(c.sequence[p] == c.sphere_vertices[i]);
    CHECK(c.is_canonical[p]);
    for (int q = 0; q < p; ++q) CHECK(c.sequence[q] != c.sphere_vertices[i]);
  }
  CHECK(std::count(c.is_canonical.begin(), c.is_canonical.end(), 1) == static_cast<long>(c.sphere_vertices.size()));
}

TEST_CASE("contour degenerate radius and horizon precondition") {
  const auto g = oracle::grid(9, 9);
  const auto c = contour(g, 40, 0);
  CHECK(c.support() == std::vector<VertexId>{40});
  CHECK(c.length() == 0);
  CHECK_THROWS_AS(contour(g, 40, 4), PreconditionError);
  CHECK_NOTHROW(contour(g, 40, 3));
}

TEST_CASE("operations are deterministic") {
  const auto h1 = oracle::diluted_lattice(oracle::triangular_spec(9), 0.3, 11);
  const auto h2 = oracle::diluted_lattice(oracle::triangular_spec(9), 0.3, 11);
  CHECK(h1.g.rotations() == h2.g.rotations());
  const auto c1 = contour(h1.g, h1.center, 5);
  const auto c2 = contour(h2.g, h2.center, 5);
  CHECK(c1.walk.darts == c2.walk.darts);
  CHECK(c1.canonical_positions == c2.canonical_positions);
}
