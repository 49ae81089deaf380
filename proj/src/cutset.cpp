#include "planesep/cutset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "planesep/metrics.hpp"

namespace planesep {

std::string_view to_string(CutsetCase c) {
  switch (c) {
    case CutsetCase::trivial: return "trivial";
    case CutsetCase::two_point: return "two_point";
    case CutsetCase::connected: return "connected";
    case CutsetCase::iterative: return "iterative";
  }
  return "trivial";
}

CutsetCase parse_cutset_case(std::string_view s) {
  if (s == "trivial") return CutsetCase::trivial;
  if (s == "two_point") return CutsetCase::two_point;
  if (s == "connected") return CutsetCase::connected;
  if (s == "iterative") return CutsetCase::iterative;
  throw InputError("unknown cutset case '" + std::string(s) + "'");
}

std::string_view to_string(PathRole r) {
  switch (r) {
    case PathRole::gamma: return "gamma";
    case PathRole::delta: return "delta";
    case PathRole::arc: return "arc";
  }
  return "gamma";
}

PathRole parse_path_role(std::string_view s) {
  if (s == "gamma") return PathRole::gamma;
  if (s == "delta") return PathRole::delta;
  if (s == "arc") return PathRole::arc;
  throw InputError("unknown path role '" + std::string(s) + "'");
}

TieBreak TieBreak::variant(int k) {
  TieBreak t;
  if (k & 1) t.geodesic = PathTieBreak::largest_id;
  if (k & 2) t.net_order = ScanOrder::descending_id;
  if (k & 4) t.short_chords = true;
  if (k & 8) t.connector = PathTieBreak::largest_id;
  return t;
}

std::vector<VertexId> CutsetResult::removed_vertices() const {
  std::vector<VertexId> out;
  for (const auto& p : curve_paths)
    if (p.role != PathRole::arc) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t cutset_bound(double doubling_constant, int n) {
  const double c4 = std::pow(doubling_constant, 4);
  return static_cast<std::int64_t>(std::floor((c4 + 1.0) * (2.0 * n + 1.0)));
}

namespace {

// Prefix tables over the cyclic contour walk, so that arc weights and arc
// crossing parities are O(1).
struct ContourTables {
  int length = 0;
  std::vector<int> cross;    // cross[i]: parity of darts [0, i) crossing the ray
  std::vector<int> passage;  // passage[i]: parity of anchor passages at positions [0, i)
  std::vector<int> weight;   // weight[i]: canonical occurrences at positions [0, i)

  ContourTables(const PlanarEmbeddedGraph& g, const ContourParametrization& c, const DualRay& ray) {
    length = c.length();
    std::vector<DartId> crossed = ray.crossed_edges;
    std::sort(crossed.begin(), crossed.end());
    cross.assign(length + 1, 0);
    passage.assign(length + 1, 0);
    weight.assign(length + 1, 0);
    for (int i = 0; i < length; ++i) {
      const DartId d = c.walk.darts[i];
      const int x = std::binary_search(crossed.begin(), crossed.end(), g.edge_of(d)) ? 1 : 0;
      int p = 0;
      if (g.origin(d) == ray.anchor) {
        const DartId in = c.walk.darts[(i + length - 1) % length];
        p = passage_covers(g, in, d, ray.start_corner) ? 1 : 0;
      }
      cross[i + 1] = cross[i] ^ x;
      passage[i + 1] = passage[i] ^ p;
      weight[i + 1] = weight[i] + (c.is_canonical[i] ? 1 : 0);
    }
  }

  // Parity of the open arc running forward from position s to e (s != e):
  // darts s..e-1 and anchor passages strictly inside.
  int arc_parity(int s, int e) const {
    if (s < e) return (cross[e] ^ cross[s]) ^ (passage[e] ^ passage[s + 1]);
    return (cross[length] ^ cross[s] ^ cross[e]) ^ (passage[length] ^ passage[s + 1] ^ passage[e]);
  }

  // Canonical occurrences at positions s..e inclusive, forward.
  int arc_weight(int s, int e) const {
    if (s <= e) return weight[e + 1] - weight[s];
    return weight[length] - weight[s] + weight[e + 1];
  }
};

int path_cross_parity(const PlanarEmbeddedGraph& g, std::span<const VertexId> path, const DualRay& ray) {
  int parity = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const DartId e = g.edge_of(g.dart_between(path[i], path[i + 1]));
    if (std::find(ray.crossed_edges.begin(), ray.crossed_edges.end(), e) != ray.crossed_edges.end()) parity ^= 1;
  }
  return parity;
}

void append_path(std::vector<VertexId>& curve, std::span<const VertexId> path) {
  for (VertexId u : path)
    if (curve.empty() || curve.back() != u) curve.push_back(u);
}

}  // namespace

std::optional<BasePair> choose_base_pair(const PlanarEmbeddedGraph& g, const ContourParametrization& contour,
                                         VertexId v, int n, const DualRay& ray, PathTieBreak tie) {
  const int len = contour.length();
  if (len == 0 || contour.sphere_vertices.size() < 2) return std::nullopt;
  const ContourTables tables(g, contour, ray);

  std::vector<int> pos_of(g.num_vertices(), -1);
  for (std::size_t i = 0; i < contour.sphere_vertices.size(); ++i)
    pos_of[contour.sphere_vertices[i]] = contour.canonical_positions[i];

  std::vector<VertexId> by_id = contour.sphere_vertices;
  std::sort(by_id.begin(), by_id.end());

  std::optional<BasePair> best;
  BfsWorkspace ws(g);
  const int reach = 2 * n + 1;
  for (VertexId x : by_id) {
    ws.run(x, reach);
    std::vector<VertexId> partners;
    for (VertexId y : ws.visited())
      if (y > x && pos_of[y] >= 0) partners.push_back(y);
    std::sort(partners.begin(), partners.end());
    for (VertexId y : partners) {
      std::vector<VertexId> gamma = ws.backtrack(y, tie);  // y .. x
      std::reverse(gamma.begin(), gamma.end());            // x .. y
      if (std::find(gamma.begin(), gamma.end(), v) != gamma.end())
        throw std::logic_error("base geodesic passes through the center");
      const int gp = path_cross_parity(g, gamma, ray);
      const int p = pos_of[x];
      const int q = pos_of[y];
      BasePair cand;
      if ((tables.arc_parity(p, q) ^ gp) == 1) {
        cand.a = x;
        cand.b = y;
        cand.arc_start = p;
        cand.arc_end = q;
        cand.gamma = std::move(gamma);
      } else {
        if ((tables.arc_parity(q, p) ^ gp) != 1)
          throw std::logic_error("neither arc of a contour split winds around the center");
        cand.a = y;
        cand.b = x;
        cand.arc_start = q;
        cand.arc_end = p;
        std::reverse(gamma.begin(), gamma.end());
        cand.gamma = std::move(gamma);
      }
      cand.weight = tables.arc_weight(cand.arc_start, cand.arc_end);
      // Pairs are scanned in lexicographic (x, y) order, so a strict
      // comparison keeps the lexicographically smallest minimiser.
      if (!best || cand.weight < best->weight) best = std::move(cand);
    }
  }
  return best;
}

namespace {

struct Context {
  const PlanarEmbeddedGraph& g;
  VertexId v;
  int n;
  const ContourParametrization& contour;
  const DualRay& ray;
  const DistanceField& from_v;
  double c_hat;
  std::int64_t bound;
};

// Invariants of every net: the three net properties, and
// the floor(n/2)-balls around net points are pairwise disjoint and inside
// B(v, ceil(9n/2)).
void assert_net(const Context& ctx, const Net& net) {
  const NetCheck check = check_net(ctx.g, net);
  if (!check.ok()) throw std::logic_error("epsilon-net property violated");
  const int half = ctx.n / 2;
  const int outer = (9 * ctx.n + 1) / 2;
  std::vector<char> owned(ctx.g.num_vertices(), 0);
  BfsWorkspace ws(ctx.g);
  for (VertexId p : net.points) {
    ws.run(p, half);
    for (VertexId w : ws.visited()) {
      if (owned[w]) throw std::logic_error("net balls overlap");
      if (ctx.from_v[w] > outer) throw std::logic_error("net ball leaves B(v, 9n/2)");
      owned[w] = 1;
    }
  }
}

struct Attempt {
  CutsetResult result;
  std::string failure;  // empty on success
};

Attempt build(const Context& ctx, int variant) {
  const auto& g = ctx.g;
  const auto& c = ctx.contour;
  const TieBreak tb = TieBreak::variant(variant);
  const int n = ctx.n;
  const int big = 4 * n;
  const int link = 2 * n + 1;

  Attempt at;
  CutsetResult& r = at.result;
  r.v = ctx.v;
  r.n = n;
  r.doubling_constant = ctx.c_hat;
  r.bound_used = ctx.bound;
  r.diagnostics.tie_break_variant = variant;
  r.diagnostics.sphere_count = static_cast<int>(c.sphere_vertices.size());
  r.diagnostics.contour_length = c.length();

  const std::optional<BasePair> base = choose_base_pair(g, c, ctx.v, n, ctx.ray, tb.geodesic);
  std::vector<char> removed(g.num_vertices(), 0);
  std::vector<VertexId> curve;  // closed vertex walk of the separating curve

  if (!base) {
    r.kind = CutsetCase::trivial;
    r.omega = ball(g, ctx.v, big);
    r.boundary = boundary(g, r.omega);
    r.curve_is_simple = false;
  } else {
    r.diagnostics.base_a = base->a;
    r.diagnostics.base_b = base->b;
    r.diagnostics.base_weight = base->weight;
    r.curve_paths.push_back({PathRole::gamma, base->gamma});

    const int L = c.length();
    const int span_len = (base->arc_end - base->arc_start + L) % L;
    auto pos = [&](int t) { return (base->arc_start + t) % L; };
    auto seq = [&](int t) { return c.sequence[pos(t)]; };
    auto canonical = [&](int t) { return c.is_canonical[pos(t)] != 0; };
    auto arc_vertices = [&](int t0, int t1) {
      std::vector<VertexId> out;
      for (int t = t0; t <= t1; ++t) out.push_back(seq(t));
      return out;
    };
    auto parity_of = [&](const std::vector<VertexId>& closed) { return winding_parity(g, closed, ctx.ray); };

    if (base->weight == 2) {
      r.kind = CutsetCase::two_point;
      const auto arc = arc_vertices(0, span_len);
      r.curve_paths.push_back({PathRole::arc, arc});
      curve = close_with(arc, base->gamma);
      r.diagnostics.splice_parities.push_back(parity_of(curve));
    } else {
      const VertexId a = base->a;
      const VertexId b = base->b;
      auto arc_offset = [&](VertexId u) { return (c.canonical_position_of(u) - base->arc_start + L) % L; };
      // Net of the canonical distance-4n vertices at arc offsets in (lo, span_len).
      auto net_after = [&](int lo) {
        std::vector<VertexId> src;
        for (int t = lo + 1; t < span_len; ++t)
          if (canonical(t)) src.push_back(seq(t));
        if (src.empty()) return Net{n, {}, {}};
        Net net = epsilon_net(g, src, n, tb.net_order);
        assert_net(ctx, net);
        return net;
      };

      Net net = net_after(0);
      r.diagnostics.net_sizes.push_back(static_cast<int>(net.points.size()));
      r.diagnostics.nets.push_back(net);
      {
        std::vector<VertexId> verts = net.points;
        verts.push_back(a);
        verts.push_back(b);
        const ComponentGraph cg = build_component_graph(g, verts, link);
        std::vector<int> sizes(cg.num_components, 0);
        for (int comp : cg.component) ++sizes[comp];
        r.diagnostics.component_sizes = sizes;
      }

      // Chords only move forward along S1 and never join a to b directly, so
      // every replaced sub-arc weighs less than S1 and closes with parity 0.
      std::vector<int> anchors;
      auto set_anchors = [&](const Net& nt) {
        anchors.clear();
        for (VertexId u : nt.points) anchors.push_back(arc_offset(u));
        anchors.push_back(span_len);
        std::sort(anchors.begin(), anchors.end());
      };
      set_anchors(net);

      auto probe_parity = [&](const std::vector<VertexId>& so_far, int t) {
        std::vector<VertexId> probe = so_far;
        append_path(probe, arc_vertices(t, span_len));
        return parity_of(close_with(probe, base->gamma));
      };

      bool used_connector = false;
      int cur_t = 0;
      curve.push_back(a);
      std::vector<VertexId> delta{a};
      BfsWorkspace ws(g);
      while (cur_t < span_len) {
        const VertexId x = seq(cur_t);
        ws.run(x, link);
        int q = -1;
        for (int k = static_cast<int>(anchors.size()) - 1; k >= 0; --k) {
          const int t = anchors[k];
          if (t <= cur_t || (cur_t == 0 && t == span_len) || !ws.reached(seq(t))) continue;
          if (q < 0 || tb.short_chords) q = t;
          if (!tb.short_chords) break;
        }
        if (q >= 0) {
          append_path(delta, geodesic(g, x, seq(q), tb.geodesic));
          cur_t = q;
          continue;
        }

        // No anchor in reach: connect to the furthest canonical distance-4n
        // vertex within n, then follow the contour to the next distance-4n vertex.
        used_connector = true;
        int a_t = -1;
        for (int t = span_len; t > cur_t; --t) {
          if (!canonical(t) || (cur_t == 0 && t == span_len)) continue;
          if (ws.dist(seq(t)) >= 0 && ws.dist(seq(t)) <= n) {
            a_t = t;
            break;
          }
        }
        if (a_t >= 0) append_path(delta, geodesic(g, x, seq(a_t), tb.connector));
        else a_t = cur_t;
        int b_t = -1;
        for (int t = a_t + 1; t <= span_len; ++t)
          if (ctx.from_v[seq(t)] == big) {
            b_t = t;
            break;
          }
        if (b_t < 0) throw std::logic_error("no distance-4n vertex after the connector");
        r.curve_paths.push_back({PathRole::delta, delta});
        append_path(curve, delta);
        const auto arc = arc_vertices(a_t, b_t);
        r.curve_paths.push_back({PathRole::arc, arc});
        r.diagnostics.splice_parities.push_back(probe_parity(curve, a_t));
        if (r.diagnostics.splice_parities.back() != 1) {
          at.failure = "splice parity 0 after delta " + std::to_string(r.diagnostics.splice_parities.size());
          return at;
        }
        append_path(curve, arc);
        delta.assign({seq(b_t)});
        cur_t = b_t;
        net = net_after(b_t);
        r.diagnostics.net_sizes.push_back(static_cast<int>(net.points.size()));
        r.diagnostics.nets.push_back(net);
        set_anchors(net);
      }
      r.curve_paths.push_back({PathRole::delta, delta});
      append_path(curve, delta);
      r.kind = used_connector ? CutsetCase::iterative : CutsetCase::connected;
      curve = close_with(curve, base->gamma);
      r.diagnostics.splice_parities.push_back(parity_of(curve));
    }

    if (r.diagnostics.splice_parities.back() != 1) {
      at.failure = "assembled curve has winding parity 0";
      return at;
    }
    for (const auto& p : r.curve_paths) {
      if (p.role == PathRole::arc) continue;
      for (VertexId u : p.vertices) {
        if (u == ctx.v) throw std::logic_error("curve path passes through the center");
        removed[u] = 1;
      }
    }
    r.omega = component_avoiding(g, ctx.v, removed);
    r.boundary = boundary(g, r.omega);
    std::vector<VertexId> sorted = curve;
    std::sort(sorted.begin(), sorted.end());
    r.curve_is_simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  const VerificationReport report = verify_cutset(g, ctx.v, n, r);
  if (!report.passed()) {
    std::ostringstream msg;
    msg << "verification failed:";
    for (const auto& cl : report.clauses)
      if (!cl.passed) msg << ' ' << cl.name << " (" << cl.detail << ")";
    at.failure = msg.str();
  }
  return at;
}

}  // namespace

CutsetResult find_cutset(const PlanarEmbeddedGraph& g, VertexId v, int n, const CutsetOptions& options) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (n < 1) throw PreconditionError("radius n must be at least 1");
  const std::vector<int> hd = horizon_distances(g);
  if (hd[v] <= 4 * n)
    throw PreconditionError("horizon violated: B(" + std::to_string(v) + ", 4n = " + std::to_string(4 * n) +
                            ") reaches the horizon (distance to horizon is " + std::to_string(hd[v]) + ")");

  const double c_hat =
      options.doubling_constant ? *options.doubling_constant : local_doubling_estimate(g, v, n).c_hat;
  const ContourParametrization c = contour(g, v, 4 * n);
  if (c.sphere_vertices.empty()) throw PreconditionError("no distance-4n vertex on the contour");
  const DualRay ray = dual_ray(g, v);
  if (winding_parity(g, c.walk, ray) != 1) throw std::logic_error("contour does not wind around the center");
  const DistanceField from_v = bfs_distances(g, v);

  const Context ctx{g, v, n, c, ray, from_v, c_hat, cutset_bound(c_hat, n)};
  std::vector<std::string> rejected;
  const int attempts = 1 + std::max(0, std::min(options.max_alternatives, 15));
  for (int k = 0; k < attempts; ++k) {
    Attempt at = build(ctx, k);
    if (at.failure.empty()) {
      at.result.diagnostics.rejected_variants = std::move(rejected);
      return at.result;
    }
    rejected.push_back("variant " + std::to_string(k) + ": " + at.failure);
  }
  std::string msg = "find_cutset: no tie-break variant produced a verified domain";
  for (const auto& s : rejected) msg += "; " + s;
  throw VerificationError(msg);
}

bool VerificationReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

const ClauseResult* VerificationReport::clause(std::string_view name) const {
  for (const auto& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport verify_cutset(const PlanarEmbeddedGraph& g, VertexId v, int n, const CutsetResult& result,
                                 std::optional<double> doubling_constant) {
  VerificationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.clauses.push_back({std::move(name), ok, std::move(detail)});
  };
  const int nv = g.num_vertices();
  std::vector<VertexId> omega = result.omega;
  std::sort(omega.begin(), omega.end());
  omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
  const bool ids_ok = g.contains(v) &&
                      std::all_of(omega.begin(), omega.end(), [&](VertexId u) { return g.contains(u); }) &&
                      std::all_of(result.boundary.begin(), result.boundary.end(), [&](VertexId u) { return g.contains(u); });
  if (!ids_ok || result.v != v || result.n != n) {
    add("input_consistent", false, "center, radius or vertex ids do not match the host");
    return rep;
  }
  add("input_consistent", true, "");

  // Fresh distances from v.
  std::vector<int> dist(nv, -1);
  {
    std::vector<VertexId> q{v};
    dist[v] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (VertexId w : g.neighbors(q[h]))
        if (dist[w] < 0) {
          dist[w] = dist[q[h]] + 1;
          q.push_back(w);
        }
  }
  std::vector<char> in_omega(nv, 0);
  for (VertexId u : omega) in_omega[u] = 1;

  int missing = 0;
  for (VertexId u = 0; u < nv; ++u)
    if (dist[u] <= n && !in_omega[u]) ++missing;
  add("ball_contained", missing == 0, std::to_string(missing) + " vertices of B(v,n) outside Omega");

  // Connectivity of the induced subgraph on Omega.
  std::size_t reached = 0;
  if (in_omega[v]) {
    std::vector<char> seen(nv, 0);
    std::vector<VertexId> q{v};
    seen[v] = 1;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (VertexId w : g.neighbors(q[h]))
        if (in_omega[w] && !seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    reached = q.size();
  }
  add("omega_connected", in_omega[v] && reached == omega.size(),
      std::to_string(reached) + " of " + std::to_string(omega.size()) + " reachable from v inside Omega");

  std::vector<VertexId> bd;
  {
    std::vector<char> mark(nv, 0);
    for (VertexId u : omega)
      for (VertexId w : g.neighbors(u))
        if (!in_omega[w] && !mark[w]) {
          mark[w] = 1;
          bd.push_back(w);
        }
    std::sort(bd.begin(), bd.end());
  }
  std::vector<VertexId> reported = result.boundary;
  std::sort(reported.begin(), reported.end());
  add("boundary_matches", bd == reported,
      "recomputed " + std::to_string(bd.size()) + ", reported " + std::to_string(reported.size()));

  int far = 0;
  for (VertexId u : bd)
    if (dist[u] > 6 * n) ++far;
  add("boundary_in_ball", far == 0, std::to_string(far) + " boundary vertices outside B(v,6n)");

  // Separation: the v-component of the host minus the boundary is exactly
  // Omega and never touches the horizon.
  {
    std::vector<char> cut(nv, 0);
    for (VertexId u : bd) cut[u] = 1;
    std::vector<char> seen(nv, 0);
    std::vector<VertexId> q;
    if (!cut[v]) {
      q.push_back(v);
      seen[v] = 1;
    }
    bool horizon_hit = false;
    for (std::size_t h = 0; h < q.size(); ++h) {
      if (g.is_horizon(q[h])) horizon_hit = true;
      for (VertexId w : g.neighbors(q[h]))
        if (!cut[w] && !seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
    std::sort(q.begin(), q.end());
    const bool same = q == omega;
    add("separation", same && !horizon_hit,
        std::string(horizon_hit ? "component of v reaches the horizon" : "") +
            (same ? "" : (horizon_hit ? "; " : "") + std::string("Omega differs from the enclosed component")));
  }

  std::int64_t bound = result.bound_used;
  std::string bound_detail = "|boundary| = " + std::to_string(bd.size()) + ", budget " + std::to_string(bound);
  bool bound_ok = static_cast<std::int64_t>(bd.size()) <= bound;
  if (doubling_constant) {
    const std::int64_t expect = cutset_bound(*doubling_constant, n);
    if (expect != bound) {
      bound_ok = false;
      bound_detail += ", expected budget " + std::to_string(expect);
    }
  }
  add("boundary_bound", bound_ok, bound_detail);

  if (result.kind == CutsetCase::trivial) {
    add("boundary_on_curve", true, "n/a for the trivial case");
  } else {
    const std::vector<VertexId> removed = result.removed_vertices();
    int off = 0;
    for (VertexId u : bd)
      if (!std::binary_search(removed.begin(), removed.end(), u)) ++off;
    add("boundary_on_curve", off == 0, std::to_string(off) + " boundary vertices off the removed curve");
  }

  rep.ratio = n > 0 ? static_cast<double>(bd.size()) / n : 0.0;
  rep.curve_is_simple = result.curve_is_simple;
  return rep;
}

}  // namespace planesep
