#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "planesep/bfs.hpp"
#include "planesep/contour.hpp"
#include "planesep/csv.hpp"
#include "planesep/cutset.hpp"
#include "planesep/cutset_json.hpp"
#include "planesep/experiments.hpp"
#include "planesep/generators.hpp"
#include "planesep/graph_io.hpp"
#include "planesep/metrics.hpp"
#include "planesep/render.hpp"

using namespace planesep;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string graph;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::optional<VertexId> center;
  std::optional<int> radius;
};

void add_common(CLI::App* sub, Common& c, bool needs_graph = true) {
  auto* g = sub->add_option("--graph", c.graph, "Host graph JSON file");
  if (needs_graph) g->required()->check(CLI::ExistingFile);
  sub->add_option("--out", c.out, "Output file (default: stdout)");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", c.seed, "Seed for randomized steps");
  sub->add_option("--center", c.center, "Center vertex (default: vertex farthest from the horizon)");
  sub->add_option("--radius", c.radius, "Radius n");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    save_text_file(c.out, text);
}

VertexId pick_center(const PlanarEmbeddedGraph& g, const Common& c) {
  if (c.center) {
    if (!g.contains(*c.center)) throw InputError("--center: unknown vertex " + std::to_string(*c.center));
    return *c.center;
  }
  const auto h = horizon_distances(g);
  return static_cast<VertexId>(std::max_element(h.begin(), h.end()) - h.begin());
}

int need_radius(const Common& c) {
  if (!c.radius) throw InputError("--radius is required for this subcommand");
  return *c.radius;
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json doubling_json(const DoublingEstimate& est) {
  ordered_json j;
  j["c_hat"] = est.c_hat;
  j["n_min"] = est.n_min;
  j["n_max"] = est.n_max;
  j["centers_used"] = est.centers_used;
  ordered_json s = ordered_json::array();
  for (const auto& x : est.samples)
    s.push_back({{"n", x.n}, {"a", x.a}, {"b", x.b}, {"volume_2n", x.volume_2n}, {"volume_n", x.volume_n},
                 {"ratio", x.ratio}});
  j["samples"] = std::move(s);
  return j;
}

std::vector<int> radius_range(int lo, int hi) {
  if (lo < 1 || hi < lo) throw InputError("radius range must satisfy 1 <= min <= max");
  std::vector<int> r;
  for (int n = lo; n <= hi; ++n) r.push_back(n);
  return r;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  FamilySpec spec;
  std::string family = "grid";
  std::string corpus;
};

struct MeasuredInstance {
  double c_hat = 0;
  double d_hat = 0;
  std::string note;
};

MeasuredInstance measure(const PlanarEmbeddedGraph& g, VertexId center, std::uint64_t seed) {
  MeasuredInstance m;
  const int h = horizon_distances(g)[center];
  const int r_max = std::clamp(h / 2, 1, 25);
  try {
    m.c_hat = doubling_constant(g, CenterSpec{{}, 200'000, seed}, radius_range(1, r_max)).c_hat;
  } catch (const PreconditionError& e) {
    m.note = e.what();
  }
  try {
    m.d_hat = growth_exponent(g, center, radius_range(1, std::max(1, h - 1))).fit.slope;
  } catch (const PreconditionError& e) {
    if (m.note.empty()) m.note = e.what();
  }
  return m;
}

int run_corpus(const GenerateArgs& a, const Common& c) {
  namespace fs = std::filesystem;
  fs::create_directories(a.corpus);
  auto make = [](Family f) {
    FamilySpec s;
    s.family = f;
    return s;
  };
  std::vector<std::pair<std::string, FamilySpec>> items;
  {
    auto s = make(Family::grid);
    s.width = s.height = 41;
    items.emplace_back("grid_41x41", s);
    s = make(Family::triangular);
    s.size = 20;
    items.emplace_back("triangular_r20", s);
    s = make(Family::hexagonal);
    s.width = s.height = 41;
    items.emplace_back("hexagonal_41x41", s);
    s = make(Family::spider);
    s.arms = 4;
    s.length = 40;
    items.emplace_back("spider_4x40", s);
    s = make(Family::tree);
    s.branching = 2;
    s.depth = 8;
    items.emplace_back("tree_2_d8", s);
    s = make(Family::substitution);
    s.rule = 0;
    s.iterations = 5;
    items.emplace_back("substitution_r0_i5", s);
    for (std::uint64_t k = 0; k < 3; ++k) {
      s = make(Family::substitution);
      s.rule = 1;
      s.iterations = 8;
      s.seed = c.seed + k;
      items.emplace_back("substitution_r1_i8_s" + std::to_string(s.seed), s);
    }
  }
  constexpr double kMaxDoubling = 8.0;
  std::vector<ManifestEntry> manifest;
  for (const auto& [name, spec] : items) {
    const auto g = generate(spec);
    ManifestEntry e;
    e.file = name + ".json";
    e.spec = spec;
    e.center = central_vertex(spec);
    e.vertices = g.num_vertices();
    const auto m = measure(g, e.center, c.seed);
    e.c_hat = m.c_hat;
    e.d_hat = m.d_hat;
    if (spec.family == Family::substitution && (m.c_hat <= 0 || m.c_hat > kMaxDoubling)) {
      e.excluded = true;
      e.reason = m.c_hat <= 0 ? "doubling constant not measurable: " + m.note
                              : "measured doubling constant " + format_fixed6(m.c_hat) + " exceeds " +
                                    format_fixed6(kMaxDoubling);
      std::cerr << "excluded " << name << ": " << e.reason << "\n";
    }
    save_text_file((fs::path(a.corpus) / e.file).string(), write_graph(g));
    manifest.push_back(std::move(e));
  }
  save_text_file((fs::path(a.corpus) / "manifest.json").string(), write_manifest(manifest));
  return kExitOk;
}

int run_generate(GenerateArgs& a, const Common& c) {
  a.spec.family = parse_family(a.family);
  a.spec.seed = c.seed;
  if (!a.corpus.empty()) return run_corpus(a, c);
  const auto g = generate(a.spec);
  emit(c, write_graph(g));
  std::cerr << "center " << central_vertex(a.spec) << "\n";
  return kExitOk;
}

struct CutsetArgs {
  std::optional<double> doubling;
  int alternatives = 8;
  std::string result;
  int n_min = 1;
  int n_max = 0;
  int k_max = 3;
  int factor = 6;
  std::int64_t t_max = 10'000;
  int trials = 2000;
  int threads = 0;
  int outer = 0;
  std::string mode = "exact";
  std::vector<std::int64_t> n_values;
  std::size_t center_budget = 1'000'000;
};

int run_cutset(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  const VertexId v = pick_center(g, c);
  CutsetOptions opts;
  opts.doubling_constant = a.doubling;
  opts.max_alternatives = a.alternatives;
  const auto r = find_cutset(g, v, need_radius(c), opts);
  emit(c, cutset_to_json(r));
  return kExitOk;
}

int run_verify(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  const auto r = cutset_from_json(load_text_file(a.result));
  if (!g.contains(r.v)) throw InputError("result names unknown center " + std::to_string(r.v));
  const auto rep = verify_cutset(g, r.v, r.n, r, a.doubling);
  emit(c, verification_to_json(rep, r.v, r.n));
  for (const auto& cl : rep.clauses)
    if (!cl.passed) std::cerr << "clause " << cl.name << " failed: " << cl.detail << "\n";
  return rep.passed() ? kExitOk : kExitVerification;
}

int run_doubling(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  CenterSpec spec;
  spec.budget = a.center_budget;
  spec.seed = c.seed;
  if (c.center) spec.centers = {pick_center(g, c)};
  const int hi = a.n_max > 0 ? a.n_max : (c.radius ? *c.radius : 10);
  const auto est = doubling_constant(g, spec, radius_range(a.n_min, hi));
  emit(c, c.format == "csv" ? doubling_csv(est).str() : json_text(doubling_json(est)));
  return kExitOk;
}

int run_growth(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  const VertexId v = pick_center(g, c);
  const int hi = a.n_max > 0 ? a.n_max : (c.radius ? *c.radius : horizon_distances(g)[v] - 1);
  const auto fit = growth_exponent(g, v, radius_range(a.n_min, std::max(a.n_min, hi)));
  if (c.format == "csv") {
    emit(c, growth_csv(fit).str());
  } else {
    ordered_json j;
    j["center"] = v;
    j["d_hat"] = fit.fit.slope;
    j["intercept"] = fit.fit.intercept;
    j["max_residual"] = fit.fit.max_residual;
    j["radii"] = fit.radii;
    j["volumes"] = fit.volumes;
    emit(c, json_text(j));
  }
  return kExitOk;
}

int run_profile(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  ProfileTable t;
  if (a.mode == "exact") {
    const VertexId v = c.center ? pick_center(g, c) : 0;
    t = brute_profile(g, a.n_max > 0 ? a.n_max : g.num_vertices(), v);
  } else {
    if (a.n_values.empty()) throw InputError("--n-values is required with --mode corollary");
    CutsetOptions opts;
    opts.doubling_constant = a.doubling;
    t = corollary_check(g, pick_center(g, c), a.n_values, opts);
  }
  if (c.format == "csv") {
    emit(c, profile_csv(t).str());
  } else {
    ordered_json j;
    j["mode"] = std::string(to_string(t.mode));
    j["center"] = t.center;
    ordered_json rows = ordered_json::array();
    for (const auto& e : t.entries)
      rows.push_back({{"n", e.n}, {"value", e.value}, {"phi_n", e.phi_n}, {"alpha_ratio", e.alpha_ratio},
                      {"omega_size", e.omega_size}});
    j["entries"] = std::move(rows);
    emit(c, json_text(j));
  }
  return kExitOk;
}

int run_mincut(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  const VertexId v = pick_center(g, c);
  const int n = need_radius(c);
  const int m = a.outer > 0 ? a.outer : 6 * n;
  const auto cut = min_vertex_cut(g, v, n, m);
  ordered_json j;
  j["v"] = v;
  j["n"] = n;
  j["m"] = m;
  j["size"] = cut.size;
  j["cut"] = cut.cut;
  emit(c, json_text(j));
  return kExitOk;
}

int run_walk(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  const auto rep = srw_displacement(g, pick_center(g, c), a.t_max, a.trials, c.seed, a.threads);
  if (c.format == "csv") {
    emit(c, walk_csv(rep).str());
  } else {
    ordered_json j;
    j["center"] = rep.center;
    j["horizon_radius"] = rep.horizon_radius;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["censored"] = rep.censored;
    j["censored_fraction"] = rep.censored_fraction;
    j["alpha_hat"] = rep.alpha_hat;
    j["fit_window"] = {rep.fit_t_min, rep.fit_t_max};
    j["times"] = rep.times;
    j["mean_displacement"] = rep.mean_displacement;
    emit(c, json_text(j));
  }
  return kExitOk;
}

int run_nash_williams(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  CutsetOptions opts;
  opts.doubling_constant = a.doubling;
  const auto rep = nash_williams(g, pick_center(g, c), a.k_max, a.factor, opts);
  if (c.format == "csv") {
    emit(c, nash_williams_csv(rep).str());
  } else {
    ordered_json j;
    j["center"] = rep.center;
    j["factor"] = rep.factor;
    ordered_json cs = ordered_json::array();
    for (const auto& x : rep.cutsets)
      cs.push_back({{"n", x.n}, {"size", x.size}, {"case", std::string(to_string(x.kind))},
                    {"separates", x.separates}, {"cutset", x.cutset}});
    j["cutsets"] = std::move(cs);
    j["partial_sum"] = rep.partial_sum;
    j["disjointness_verified"] = rep.disjointness_verified;
    j["separation_verified"] = rep.separation_verified;
    emit(c, json_text(j));
  }
  return rep.disjointness_verified && rep.separation_verified ? kExitOk : kExitVerification;
}

int run_render(const Common& c, const CutsetArgs& a) {
  const auto g = load_graph_file(c.graph);
  Overlays o;
  if (!a.result.empty()) {
    const auto r = cutset_from_json(load_text_file(a.result));
    o.omega = r.omega;
    o.boundary = r.boundary;
    for (const auto& p : r.curve_paths)
      if (p.role != PathRole::arc) o.curve.push_back(p.vertices);
  }
  if (c.radius) {
    const VertexId v = pick_center(g, c);
    o.ball = ball(g, v, *c.radius);
    o.contour = contour(g, v, *c.radius).sequence;
  }
  emit(c, render_svg(g, o));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "planesep: separating domains with linear boundary in planar graphs, with oracles and experiments.\n"
      "Exit codes: 0 success, 1 verification failure, 2 input or precondition error."};
  app.require_subcommand(1);
  Common common;
  GenerateArgs gen;
  CutsetArgs args;

  auto* generate_cmd = app.add_subcommand("generate", "Write a generated host as graph JSON (center on stderr)");
  add_common(generate_cmd, common, false);
  generate_cmd->add_option("--family", gen.family, "grid|triangular|hexagonal|spider|tree|substitution");
  generate_cmd->add_option("--width", gen.spec.width);
  generate_cmd->add_option("--height", gen.spec.height);
  generate_cmd->add_option("--size", gen.spec.size, "Triangular patch radius");
  generate_cmd->add_option("--arms", gen.spec.arms);
  generate_cmd->add_option("--length", gen.spec.length);
  generate_cmd->add_option("--branching", gen.spec.branching);
  generate_cmd->add_option("--depth", gen.spec.depth);
  generate_cmd->add_option("--rule", gen.spec.rule, "Substitution rule: 0 midpoint split, 1 random stellar split");
  generate_cmd->add_option("--iterations", gen.spec.iterations);
  generate_cmd->add_option("--corpus", gen.corpus, "Write the standard corpus and manifest.json into this directory");

  auto* cutset_cmd = app.add_subcommand("cutset", "Construct Omega around --center for radius --radius (JSON)");
  add_common(cutset_cmd, common);
  cutset_cmd->add_option("--doubling", args.doubling, "Doubling constant for the budget (default: local estimate)");
  cutset_cmd->add_option("--max-alternatives", args.alternatives, "Tie-break variants to try after the first");

  auto* verify_cmd = app.add_subcommand("verify", "Recheck a cutset JSON report; exit 1 if any clause fails");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--result", args.result, "Cutset JSON report")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--doubling", args.doubling, "Recompute the budget from this constant");

  auto* doubling_cmd = app.add_subcommand(
      "doubling", "Doubling constant estimate; CSV columns: n,a,b,volume_2n,volume_n,ratio");
  add_common(doubling_cmd, common);
  doubling_cmd->add_option("--n-min", args.n_min);
  doubling_cmd->add_option("--n-max", args.n_max, "Largest radius (default --radius, else 10)");
  doubling_cmd->add_option("--budget", args.center_budget, "Max centers x radii before sampling centers");

  auto* growth_cmd = app.add_subcommand("growth", "Growth exponent fit at --center; CSV columns: radius,volume");
  add_common(growth_cmd, common);
  growth_cmd->add_option("--n-min", args.n_min);
  growth_cmd->add_option("--n-max", args.n_max);

  auto* profile_cmd = app.add_subcommand(
      "profile", "Isoperimetric profile; CSV columns: mode,center,n,value,phi_n,alpha_ratio,omega_size");
  add_common(profile_cmd, common);
  profile_cmd->add_option("--mode", args.mode, "exact (<= 18 vertices) or corollary")
      ->check(CLI::IsMember({"exact", "corollary"}));
  profile_cmd->add_option("--n-max", args.n_max, "Largest n for exact mode");
  profile_cmd->add_option("--n-values", args.n_values, "Volumes n for corollary mode");
  profile_cmd->add_option("--doubling", args.doubling);

  auto* mincut_cmd = app.add_subcommand("mincut", "Minimum vertex cut between B(v,n) and the outside of B(v,m)");
  add_common(mincut_cmd, common);
  mincut_cmd->add_option("--outer", args.outer, "Outer radius m (default 6n)");

  auto* walk_cmd = app.add_subcommand("walk", "Random-walk displacement; CSV columns: t,mean_displacement");
  add_common(walk_cmd, common);
  walk_cmd->add_option("--t-max", args.t_max);
  walk_cmd->add_option("--trials", args.trials);
  walk_cmd->add_option("--threads", args.threads, "Worker threads (0: hardware); output does not depend on it");

  auto* nw_cmd = app.add_subcommand("nashwilliams",
                                    "Nested disjoint cutsets; CSV columns: k,n,size,case,separates,partial_sum");
  add_common(nw_cmd, common);
  nw_cmd->add_option("--k-max", args.k_max);
  nw_cmd->add_option("--factor", args.factor, "Radius schedule n_{k+1} = factor * n_k + 1");
  nw_cmd->add_option("--doubling", args.doubling);

  auto* render_cmd = app.add_subcommand("render", "SVG drawing; --result adds Omega, boundary and curve layers, "
                                                  "--radius adds the ball and its contour");
  add_common(render_cmd, common);
  render_cmd->add_option("--result", args.result, "Cutset JSON report")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*generate_cmd) return run_generate(gen, common);
    if (*cutset_cmd) return run_cutset(common, args);
    if (*verify_cmd) return run_verify(common, args);
    if (*doubling_cmd) return run_doubling(common, args);
    if (*growth_cmd) return run_growth(common, args);
    if (*profile_cmd) return run_profile(common, args);
    if (*mincut_cmd) return run_mincut(common, args);
    if (*walk_cmd) return run_walk(common, args);
    if (*nw_cmd) return run_nash_williams(common, args);
    if (*render_cmd) return run_render(common, args);
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitInput;
}
