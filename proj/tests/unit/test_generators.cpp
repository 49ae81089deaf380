#include <doctest.h>

#include "../support/oracles.hpp"
#include "planesep/bfs.hpp"
#include "planesep/generators.hpp"
#include "planesep/metrics.hpp"

using namespace planesep;

TEST_CASE("family sizes") {
  const auto g = generate(oracle::grid_spec(7, 4));
  CHECK(g.num_vertices() == 28);
  CHECK(g.num_edges() == 6 * 4 + 7 * 3);

  const auto sp = generate(oracle::spider_spec(4, 20));
  CHECK(sp.num_vertices() == 81);
  CHECK(sp.num_edges() == 80);
  CHECK(sp.num_faces() == 1);

  for (int r : {1, 3, 6}) {
    const auto t = generate(oracle::triangular_spec(r));
    CHECK(t.num_vertices() == 3 * r * r + 3 * r + 1);
    CHECK(t.num_faces() == 6 * r * r + 1);
  }

  const auto tr = generate(oracle::tree_spec(2, 5));
  CHECK(tr.num_vertices() == 63);
  CHECK(tr.num_faces() == 1);
  const auto t3 = generate(oracle::tree_spec(3, 3));
  CHECK(t3.num_vertices() == 1 + 3 + 9 + 27);

  const auto hx = generate(oracle::hexagonal_spec(10, 8));
  CHECK(hx.num_vertices() == 80);
  for (VertexId u = 0; u < hx.num_vertices(); ++u) CHECK(hx.degree(u) <= 3);

  for (int i : {0, 1, 3}) {
    FamilySpec s;
    s.family = Family::substitution;
    s.rule = 0;
    s.iterations = i;
    const auto sub = generate(s);
    const int side = 1 << i;
    CHECK(sub.num_vertices() == (side + 1) * (side + 2) / 2);
    CHECK(sub.num_faces() == side * side + 1);
  }
}

TEST_CASE("generators are deterministic and validate parameters") {
  FamilySpec s;
  s.family = Family::substitution;
  s.rule = 1;
  s.iterations = 5;
  s.seed = 9;
  CHECK(generate(s).rotations() == generate(s).rotations());
  s.seed = 10;
  FamilySpec s9 = s;
  s9.seed = 9;
  CHECK(generate(s).num_vertices() != generate(s9).num_vertices());

  CHECK_THROWS_AS(generate(oracle::grid_spec(0, 5)), InputError);
  CHECK_THROWS_AS(generate(oracle::spider_spec(0, 5)), InputError);
  FamilySpec bad;
  bad.family = Family::substitution;
  bad.rule = 7;
  bad.iterations = 2;
  CHECK_THROWS_AS(generate(bad), InputError);
  CHECK(parse_family("triangular") == Family::triangular);
  CHECK(to_string(Family::hexagonal) == "hexagonal");
  CHECK_THROWS_AS(parse_family("torus"), InputError);
}

TEST_CASE("central vertices") {
  CHECK(central_vertex(oracle::grid_spec(5, 5)) == 12);
  CHECK(central_vertex(oracle::grid_spec(41, 41)) == 840);
  CHECK(central_vertex(oracle::grid_spec(1001, 1001)) == 501000);
  CHECK(central_vertex(oracle::spider_spec(4, 10)) == 0);
  CHECK(central_vertex(oracle::tree_spec(2, 4)) == 0);
  const auto spec = oracle::triangular_spec(5);
  const auto g = generate(spec);
  CHECK(horizon_distances(g)[central_vertex(spec)] == 5);
}

TEST_CASE("straight-line construction picks the largest face as outer") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
  const auto g = from_straight_line(pts, edges);
  CHECK(g.num_faces() == 5);
  CHECK(g.face_darts(g.outer_face()).size() == 4);
  CHECK_FALSE(g.on_outer_face(4));
  CHECK(g.horizon_vertices() == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("growth of generated families") {
  const auto tspec = oracle::triangular_spec(40);
  const auto tri = generate(tspec);
  std::vector<int> radii;
  for (int r = 4; r <= 30; ++r) radii.push_back(r);
  CHECK(growth_exponent(tri, central_vertex(tspec), radii).fit.slope == doctest::Approx(2.0).epsilon(0.1));
  // Trees: the doubling ratio keeps growing with the radius.
  const auto tree = generate(oracle::tree_spec(2, 14));
  CenterSpec root;
  root.centers = {0};
  const std::vector<int> r1{1}, r4{4};
  CHECK(doubling_constant(tree, root, r4).c_hat > doubling_constant(tree, root, r1).c_hat);
}
