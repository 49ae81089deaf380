#include "planesep/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "planesep/bfs.hpp"

namespace planesep {

namespace {

std::vector<VertexId> seeded_subset(std::vector<VertexId> pool, std::size_t count, std::uint64_t seed) {
  if (pool.size() <= count) return pool;
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates with our own index draw so results do not depend on
  // the standard library's distribution implementation.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// cumulative[k] = |B(center, k)| for k <= radius.
std::vector<std::int64_t> volumes(BfsWorkspace& ws, VertexId center, int radius) {
  ws.run(center, radius);
  std::vector<std::int64_t> cum(radius + 1, 0);
  for (VertexId u : ws.visited()) ++cum[ws.dist(u)];
  for (int k = 1; k <= radius; ++k) cum[k] += cum[k - 1];
  return cum;
}

}  // namespace

DoublingEstimate doubling_constant(const PlanarEmbeddedGraph& g, const CenterSpec& spec, std::span<const int> radii_in) {
  std::vector<int> radii(radii_in.begin(), radii_in.end());
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  radii.erase(std::remove_if(radii.begin(), radii.end(), [](int r) { return r < 1; }), radii.end());
  if (radii.empty()) throw PreconditionError("doubling_constant: no positive radius given");

  std::vector<VertexId> centers = spec.centers;
  if (centers.empty()) {
    centers.resize(g.num_vertices());
    std::iota(centers.begin(), centers.end(), 0);
  }
  for (VertexId c : centers)
    if (!g.contains(c)) throw InputError("unknown vertex " + std::to_string(c));
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  if (centers.size() * radii.size() > spec.budget) {
    const std::size_t keep = std::max<std::size_t>(1, spec.budget / radii.size());
    centers = seeded_subset(std::move(centers), keep, spec.seed);
  }

  const std::vector<int> hd = horizon_distances(g);
  const std::size_t nr = radii.size();
  std::vector<std::int64_t> max2(nr, -1), min1(nr, std::numeric_limits<std::int64_t>::max());
  std::vector<VertexId> arg2(nr, kNoVertex), arg1(nr, kNoVertex);
  BfsWorkspace ws(g);
  DoublingEstimate est;
  for (VertexId c : centers) {
    int top = -1;
    for (std::size_t i = 0; i < nr; ++i)
      if (hd[c] > 2 * radii[i]) top = static_cast<int>(i);
    if (top < 0) continue;
    ++est.centers_used;
    const auto cum = volumes(ws, c, 2 * radii[top]);
    for (int i = 0; i <= top; ++i) {
      const std::int64_t v2 = cum[2 * radii[i]];
      const std::int64_t v1 = cum[radii[i]];
      if (v2 > max2[i]) {
        max2[i] = v2;
        arg2[i] = c;
      }
      if (v1 < min1[i]) {
        min1[i] = v1;
        arg1[i] = c;
      }
    }
  }

  est.c_hat = 1.0;
  for (std::size_t i = 0; i < nr; ++i) {
    if (arg2[i] == kNoVertex) continue;
    DoublingSample s{arg2[i], arg1[i], radii[i], max2[i], min1[i], static_cast<double>(max2[i]) / min1[i]};
    est.c_hat = std::max(est.c_hat, s.ratio);
    if (est.samples.empty()) est.n_min = s.n;
    est.n_max = s.n;
    est.samples.push_back(s);
  }
  if (est.samples.empty()) throw PreconditionError("doubling_constant: no horizon-valid (center, radius) pair");
  return est;
}

DoublingEstimate local_doubling_estimate(const PlanarEmbeddedGraph& g, VertexId v, int n) {
  std::vector<VertexId> pool = ball(g, v, 4 * n);
  pool.erase(std::remove(pool.begin(), pool.end(), v), pool.end());
  CenterSpec spec;
  spec.centers = seeded_subset(std::move(pool), 32, 0);
  spec.centers.push_back(v);
  std::vector<int> radii(std::max(1, n));
  std::iota(radii.begin(), radii.end(), 1);
  return doubling_constant(g, spec, radii);
}

LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw PreconditionError("fit_loglog: need at least two points");
  const std::size_t k = x.size();
  std::vector<double> lx(k), ly(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw PreconditionError("fit_loglog: values must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / k;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx <= 0) throw PreconditionError("fit_loglog: abscissae are all equal");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < k; ++i)
    fit.max_residual = std::max(fit.max_residual, std::abs(ly[i] - (fit.intercept + fit.slope * lx[i])));
  return fit;
}

GrowthFit growth_exponent(const PlanarEmbeddedGraph& g, VertexId v, std::span<const int> radii_in) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  const std::vector<int> hd = horizon_distances(g);
  std::vector<int> radii;
  for (int r : radii_in)
    if (r >= 1 && hd[v] > r) radii.push_back(r);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  if (radii.size() < 4) throw PreconditionError("growth_exponent: need at least 4 distinct horizon-valid radii");
  BfsWorkspace ws(g);
  const auto cum = volumes(ws, v, radii.back());
  GrowthFit out;
  out.radii = radii;
  std::vector<double> xs, ys;
  for (int r : radii) {
    out.volumes.push_back(cum[r]);
    xs.push_back(r);
    ys.push_back(static_cast<double>(cum[r]));
  }
  out.fit = fit_loglog(xs, ys);
  return out;
}

int phi(const PlanarEmbeddedGraph& g, VertexId v, std::int64_t n) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (n < 1) throw PreconditionError("phi: n must be at least 1");
  const std::vector<int> hd = horizon_distances(g);
  const int limit = hd[v] - 1;  // largest horizon-valid radius
  if (limit < 0) throw PreconditionError("phi: center lies on the horizon");
  BfsWorkspace ws(g);
  const auto cum = volumes(ws, v, limit);
  for (int k = 0; k <= limit; ++k)
    if (cum[k] >= n) return k;
  throw PreconditionError("phi: n = " + std::to_string(n) + " exceeds the volume reachable inside the horizon");
}

namespace {

// Dinic's algorithm on a small adjacency-array network.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : first_(nodes, -1) {}

  void add_edge(int u, int w, int cap) {
    to_.push_back(w);
    cap_.push_back(cap);
    next_.push_back(first_[u]);
    first_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u);
    cap_.push_back(0);
    next_.push_back(first_[w]);
    first_[w] = static_cast<int>(to_.size()) - 1;
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (levels(s, t)) {
      iter_ = first_;
      while (int f = push(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network.
  std::vector<char> residual_reach(int s) const {
    std::vector<char> seen(first_.size(), 0);
    std::vector<int> q{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (int e = first_[q[h]]; e != -1; e = next_[e])
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          q.push_back(to_[e]);
        }
    return seen;
  }

 private:
  bool levels(int s, int t) {
    level_.assign(first_.size(), -1);
    std::vector<int> q{s};
    level_[s] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (int e = first_[q[h]]; e != -1; e = next_[e])
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[q[h]] + 1;
          q.push_back(to_[e]);
        }
    return level_[t] >= 0;
  }

  // Iterative blocking-flow augmentation along one level-graph path.
  int push(int s, int t, int limit) {
    std::vector<int> path_edges;
    int u = s;
    while (true) {
      if (u == t) {
        int f = limit;
        for (int e : path_edges) f = std::min(f, cap_[e]);
        for (int e : path_edges) {
          cap_[e] -= f;
          cap_[e ^ 1] += f;
        }
        return f;
      }
      int& e = iter_[u];
      while (e != -1 && !(cap_[e] > 0 && level_[to_[e]] == level_[u] + 1)) e = next_[e];
      if (e == -1) {
        if (path_edges.empty()) return 0;
        level_[u] = -1;  // dead end
        const int back = path_edges.back();
        path_edges.pop_back();
        u = to_[back ^ 1];
        iter_[u] = next_[iter_[u]];
        continue;
      }
      path_edges.push_back(e);
      u = to_[e];
    }
  }

  std::vector<int> first_, to_, cap_, next_, level_, iter_;
};

}  // namespace

VertexCut min_vertex_cut(const PlanarEmbeddedGraph& g, VertexId v, int n, int m) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (n < 0 || m <= n) throw PreconditionError("min_vertex_cut: need 0 <= n < m");
  const std::vector<int> dist = bfs_distances(g, v).dist;
  const int nv = g.num_vertices();
  const int source = 2 * nv;
  const int sink = 2 * nv + 1;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  MaxFlow net(2 * nv + 2);
  for (VertexId x = 0; x < nv; ++x) {
    const int in = 2 * x;
    const int out = 2 * x + 1;
    if (dist[x] <= n) {
      net.add_edge(source, in, kInf);
      net.add_edge(in, out, kInf);
    } else if (dist[x] <= m) {
      net.add_edge(in, out, 1);
    } else {
      net.add_edge(in, sink, kInf);
      continue;
    }
    for (VertexId y : g.neighbors(x)) net.add_edge(out, 2 * y, kInf);
  }
  const std::int64_t flow = net.run(source, sink);
  const std::vector<char> reach = net.residual_reach(source);

  VertexCut res;
  for (VertexId x = 0; x < nv; ++x)
    if (dist[x] > n && dist[x] <= m && reach[2 * x] && !reach[2 * x + 1]) res.cut.push_back(x);
  res.size = static_cast<int>(res.cut.size());
  if (res.size != flow) throw std::logic_error("min_vertex_cut: cut size differs from flow value");

  // Independent feasibility check.
  std::vector<char> removed = to_mask(nv, res.cut);
  std::vector<char> seen(nv, 0);
  std::vector<VertexId> q;
  for (VertexId x = 0; x < nv; ++x)
    if (dist[x] <= n) {
      seen[x] = 1;
      q.push_back(x);
    }
  for (std::size_t h = 0; h < q.size(); ++h) {
    if (dist[q[h]] > m) throw std::logic_error("min_vertex_cut: cut does not separate");
    for (VertexId w : g.neighbors(q[h]))
      if (!seen[w] && !removed[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
  }
  return res;
}

std::string_view to_string(ProfileMode m) {
  return m == ProfileMode::exact_bruteforce ? "exact_bruteforce" : "constructed_upper";
}

ProfileTable brute_profile(const PlanarEmbeddedGraph& g, int n_max, VertexId center, int max_vertices) {
  const int nv = g.num_vertices();
  if (nv > max_vertices || nv > 24)
    throw PreconditionError("brute_profile: host has " + std::to_string(nv) + " vertices, cap is " +
                            std::to_string(max_vertices));
  if (!g.contains(center)) throw InputError("unknown vertex " + std::to_string(center));
  n_max = std::min(n_max, nv);

  std::vector<std::uint32_t> adj(nv, 0);
  for (VertexId x = 0; x < nv; ++x)
    for (VertexId y : g.neighbors(x)) adj[x] |= 1u << y;

  const std::uint32_t total = 1u << nv;
  std::vector<std::uint32_t> nb(total, 0);
  std::vector<int> best(nv + 1, std::numeric_limits<int>::max());
  std::vector<std::uint32_t> witness(nv + 1, 0);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    nb[mask] = nb[mask & (mask - 1)] | adj[low];
    const int size = std::popcount(mask);
    const int bd = std::popcount(nb[mask] & ~mask);
    if (bd < best[size]) {
      best[size] = bd;
      witness[size] = mask;
    }
  }

  const auto dist = bfs_distances(g, center).dist;
  ProfileTable table;
  table.mode = ProfileMode::exact_bruteforce;
  table.center = center;
  int running = std::numeric_limits<int>::max();
  std::int64_t running_size = 0;
  for (int k = 1; k <= n_max; ++k) {
    if (best[k] < running) {
      running = best[k];
      running_size = std::popcount(witness[k]);
    }
    int ph = 0;
    while (std::count_if(dist.begin(), dist.end(), [&](int d) { return d <= ph; }) < k) ++ph;
    ProfileEntry e;
    e.n = k;
    e.value = running;
    e.phi_n = ph;
    e.alpha_ratio = ph > 0 ? static_cast<double>(running) / ph : 0.0;
    e.omega_size = running_size;
    table.entries.push_back(e);
  }
  return table;
}

ProfileTable corollary_check(const PlanarEmbeddedGraph& g, VertexId v, std::span<const std::int64_t> n_values,
                             const CutsetOptions& options) {
  ProfileTable table;
  table.mode = ProfileMode::constructed_upper;
  table.center = v;
  for (std::int64_t n : n_values) {
    const int k = phi(g, v, n);
    const CutsetResult res = find_cutset(g, v, std::max(1, k), options);
    if (static_cast<std::int64_t>(res.omega.size()) < n)
      throw std::logic_error("corollary_check: constructed domain smaller than n");
    ProfileEntry e;
    e.n = n;
    e.value = static_cast<std::int64_t>(res.boundary.size());
    e.phi_n = k;
    e.alpha_ratio = k > 0 ? static_cast<double>(e.value) / k : 0.0;
    e.omega_size = static_cast<std::int64_t>(res.omega.size());
    table.entries.push_back(e);
  }
  return table;
}

}  // namespace planesep
