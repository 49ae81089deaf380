#include <doctest.h>

#include <regex>

#include "../support/oracles.hpp"
#include "planesep/csv.hpp"
#include "planesep/cutset_json.hpp"
#include "planesep/experiments.hpp"
#include "planesep/graph_io.hpp"
#include "planesep/render.hpp"

using namespace planesep;

namespace {

std::string error_of(std::string_view text) {
  try {
    (void)read_graph(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("graph JSON round trip is byte stable") {
  for (const auto& g : {oracle::grid(6, 4), generate(oracle::triangular_spec(3)), generate(oracle::spider_spec(3, 4)),
                        oracle::diluted_lattice(oracle::grid_spec(12, 12), 0.3, 1).g}) {
    const auto text = write_graph(g);
    const auto back = read_graph(text);
    CHECK(back.rotations() == g.rotations());
    CHECK(back.outer_face_dart() == g.outer_face_dart());
    CHECK(write_graph(back) == text);
  }
  CHECK(write_graph(oracle::grid(2, 1)) == "{\"vertices\":[0,1],\"rotations\":{\"0\":[1],\"1\":[0]},\"outer_face_dart\":[0,1]}\n");
}

TEST_CASE("graph JSON errors name their location") {
  CHECK(error_of("{").find("parse error") != std::string::npos);
  CHECK(error_of("[]").find("expected an object") != std::string::npos);
  CHECK(error_of(R"({"vertices":[0,1],"rotations":{"0":[1]}})").find("outer_face_dart") != std::string::npos);
  CHECK(error_of(R"({"vertices":[0,1],"rotations":{"0":[1],"1":[0,"x"]},"outer_face_dart":[0,1]})")
            .find("/rotations/1/1") != std::string::npos);
  CHECK(error_of(R"({"vertices":[0,2],"rotations":{"0":[2],"2":[0]},"outer_face_dart":[0,2]})")
            .find("/vertices/1") != std::string::npos);
  CHECK(error_of(R"({"vertices":[0,1],"rotations":{"0":[1]},"outer_face_dart":[0,1]})")
            .find("no rotation for vertex 1") != std::string::npos);
  CHECK(error_of(R"({"vertices":[0,1,2],"rotations":{"0":[1],"1":[0],"2":[]},"outer_face_dart":[0,1]})")
            .rfind("graph JSON: ", 0) == 0);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.json"), InputError);
}

TEST_CASE("cutset JSON round trip") {
  const auto g = oracle::grid(41, 41);
  const auto r = find_cutset(g, 840, 2);
  const auto text = cutset_to_json(r);
  const auto back = cutset_from_json(text);
  CHECK(back.omega == r.omega);
  CHECK(back.boundary == r.boundary);
  CHECK(back.kind == r.kind);
  CHECK(back.curve_paths.size() == r.curve_paths.size());
  CHECK(cutset_to_json(back) == text);
  CHECK(verify_cutset(g, 840, 2, back).passed());
  const auto keys = std::regex(R"(^\{\n  "case": .*\n  "n": 2,\n  "v": 840,)");
  CHECK(std::regex_search(text, keys));

  std::string broken = text;
  broken.replace(broken.find("\"boundary_size\": "), 17, "\"boundary_size\": 9");
  CHECK_THROWS_AS(cutset_from_json(broken), InputError);

  const auto vj = verification_to_json(verify_cutset(g, 840, 2, r), 840, 2);
  CHECK(vj.find("\"passed\": true") != std::string::npos);
  CHECK(vj.find("\"ball_contained\"") != std::string::npos);
}

TEST_CASE("csv tables") {
  CsvTable t({"a", "b", "c"});
  t.add_row({std::int64_t{3}, 0.5, std::string("x")});
  t.add_row({std::int64_t{-1}, 1.0 / 3.0, std::string("y")});
  CHECK(t.str() == "a,b,c\n3,0.500000,x\n-1,0.333333,y\n");
  CHECK_THROWS(t.add_row({std::int64_t{1}}));
  CHECK(format_fixed6(2.0) == "2.000000");

  DoublingEstimate est;
  est.samples.push_back({1, 2, 3, 13, 5, 2.6});
  CHECK(doubling_csv(est).str() == "n,a,b,volume_2n,volume_n,ratio\n3,1,2,13,5,2.600000\n");

  WalkReport w;
  w.times = {0, 1};
  w.mean_displacement = {0.0, 1.0};
  CHECK(walk_csv(w).str() == "t,mean_displacement\n0,0.000000\n1,1.000000\n");
}

TEST_CASE("svg rendering") {
  const auto g = oracle::grid(5, 5);
  const auto svg = render_svg(g);
  CHECK(count(svg, "<circle") == 25);
  CHECK(count(svg, "<line") == 40);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(render_svg(g) == svg);

  Overlays o;
  o.ball = {12, 13};
  o.boundary = {14};
  o.contour = {6, 7, 8, 13, 18, 17, 16, 11};
  o.curve = {{0, 1, 2}};
  const auto layered = render_svg(g, o, family_layout(oracle::grid_spec(5, 5)));
  CHECK(count(layered, "<circle") == 28);
  CHECK(count(layered, "#9ecae1") >= 1);
  CHECK(count(layered, "#de2d26") >= 1);
  CHECK(count(layered, "<polygon") == 1);
  CHECK(count(layered, "<polyline") == 1);

  const auto layout = tutte_layout(g);
  for (VertexId u : {0, 4, 20, 24}) CHECK(std::hypot(layout[u].x, layout[u].y) == doctest::Approx(1.0));
  // Interior vertices sit at the mean of their neighbours.
  for (VertexId u : {6, 12, 18}) {
    double mx = 0, my = 0;
    for (VertexId w : g.neighbors(u)) {
      mx += layout[w].x / 4;
      my += layout[w].y / 4;
    }
    CHECK(layout[u].x == doctest::Approx(mx).epsilon(1e-6));
    CHECK(layout[u].y == doctest::Approx(my).epsilon(1e-6));
  }
  CHECK_THROWS_AS(tutte_layout(oracle::grid(2, 1)), InputError);
}

TEST_CASE("random walks are reproducible and thread independent") {
  const auto g = oracle::grid(61, 61);
  const auto a = srw_displacement(g, 1860, 400, 200, 7, 1);
  const auto b = srw_displacement(g, 1860, 400, 200, 7, 4);
  CHECK(a.mean_displacement == b.mean_displacement);
  CHECK(a.alpha_hat == b.alpha_hat);
  CHECK(a.times.front() == 0);
  CHECK(a.times.back() == 400);
  CHECK(a.mean_displacement.front() == 0.0);
  CHECK(a.alpha_hat > 0.3);
  CHECK(a.alpha_hat < 0.7);
  const auto c = srw_displacement(g, 1860, 400, 200, 8, 1);
  CHECK(c.mean_displacement != a.mean_displacement);
  CHECK_THROWS_AS(srw_displacement(g, 0, 10, 10, 1), PreconditionError);
}

TEST_CASE("nash-williams cutsets on a grid") {
  const auto g = oracle::grid(201, 201);
  const VertexId v = 100 * 201 + 100;
  CutsetOptions opts;
  opts.doubling_constant = 4.0;
  const auto rep = nash_williams(g, v, 2, 6, opts);
  REQUIRE(rep.cutsets.size() == 2);
  CHECK(rep.cutsets[0].n == 1);
  CHECK(rep.cutsets[1].n == 7);
  CHECK(rep.disjointness_verified);
  CHECK(rep.separation_verified);
  double sum = 0;
  for (const auto& c : rep.cutsets) {
    CHECK(c.separates);
    sum += 1.0 / c.size;
  }
  CHECK(rep.partial_sum == doctest::Approx(sum));
  const auto csv = nash_williams_csv(rep).str();
  CHECK(csv.rfind("k,n,size,case,separates,partial_sum\n", 0) == 0);
  CHECK(count(csv, "\n") == 3);
}
