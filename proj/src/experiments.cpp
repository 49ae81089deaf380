#include "planesep/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <random>
#include <thread>

#include "planesep/bfs.hpp"
#include "planesep/metrics.hpp"

namespace planesep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::int64_t> time_grid(std::int64_t t_max) {
  std::vector<std::int64_t> t{0};
  const int steps = static_cast<int>(std::ceil(10 * std::log10(static_cast<double>(t_max))));
  for (int k = 0; k <= steps; ++k) {
    const auto x = std::min<std::int64_t>(t_max, std::llround(std::pow(10.0, k / 10.0)));
    if (x > t.back()) t.push_back(x);
  }
  if (t.back() != t_max) t.push_back(t_max);
  return t;
}

}  // namespace

WalkReport srw_displacement(const PlanarEmbeddedGraph& g, VertexId v, std::int64_t t_max, int trials,
                            std::uint64_t seed, int threads) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (t_max < 1 || trials < 1) throw InputError("walk needs t_max >= 1 and trials >= 1");
  const int h = horizon_distances(g)[v];
  if (h <= 0) throw PreconditionError("horizon: walk center " + std::to_string(v) + " lies on the horizon");

  WalkReport rep;
  rep.center = v;
  rep.horizon_radius = h;
  rep.times = time_grid(t_max);
  rep.trials = trials;
  rep.seed = seed;

  const DistanceField dist = bfs_distances(g, v);
  const std::size_t nt = rep.times.size();
  // Row per trial; a censored trial keeps an empty row.
  std::vector<std::vector<int>> rows(trials);
  auto run = [&](int trial) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
    std::vector<int> row(nt);
    VertexId x = v;
    std::size_t next = 1;
    for (std::int64_t t = 1; t <= t_max; ++t) {
      const auto nb = g.neighbors(x);
      x = nb[rng() % nb.size()];
      if (dist[x] >= h) return;
      if (t == rep.times[next]) row[next++] = dist[x];
    }
    rows[trial] = std::move(row);
  };

  int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, trials);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int trial = w; trial < trials; trial += workers) run(trial);
    });
  for (auto& th : pool) th.join();

  std::vector<std::int64_t> sums(nt, 0);
  int kept = 0;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    ++kept;
    for (std::size_t i = 0; i < nt; ++i) sums[i] += row[i];
  }
  rep.censored = trials - kept;
  rep.censored_fraction = static_cast<double>(rep.censored) / trials;
  if (kept == 0) throw PreconditionError("horizon: all " + std::to_string(trials) + " walks were censored");
  for (std::size_t i = 0; i < nt; ++i) rep.mean_displacement.push_back(static_cast<double>(sums[i]) / kept);

  const double mid = std::sqrt(static_cast<double>(t_max));
  rep.fit_t_min = mid / std::sqrt(10.0);
  rep.fit_t_max = mid * std::sqrt(10.0);
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < nt; ++i) {
    const double t = static_cast<double>(rep.times[i]);
    if (t >= rep.fit_t_min && t <= rep.fit_t_max && rep.mean_displacement[i] > 0) {
      xs.push_back(t);
      ys.push_back(rep.mean_displacement[i]);
    }
  }
  if (xs.size() >= 2) rep.alpha_hat = fit_loglog(xs, ys).slope;
  return rep;
}

NashWilliamsReport nash_williams(const PlanarEmbeddedGraph& g, VertexId v, int k_max, int factor,
                                 const CutsetOptions& options) {
  if (k_max < 1 || factor < 1) throw InputError("nashwilliams needs k_max >= 1 and factor >= 1");
  NashWilliamsReport rep;
  rep.center = v;
  rep.factor = factor;
  const auto horizon = g.horizon_vertices();
  long n = 1;
  for (int k = 0; k < k_max; ++k) {
    if (n > std::numeric_limits<int>::max() / 8) throw PreconditionError("horizon: radius schedule overflows");
    const CutsetResult r = find_cutset(g, v, static_cast<int>(n), options);
    NashWilliamsCutset c;
    c.n = static_cast<int>(n);
    c.kind = r.kind;
    c.cutset = r.boundary;
    c.size = static_cast<int>(r.boundary.size());
    const auto comp = component_avoiding(g, v, to_mask(g.num_vertices(), c.cutset));
    c.separates = !c.cutset.empty() && std::none_of(horizon.begin(), horizon.end(), [&](VertexId u) {
      return std::binary_search(comp.begin(), comp.end(), u);
    });
    rep.cutsets.push_back(std::move(c));
    n = factor * n + 1;
  }
  rep.disjointness_verified = true;
  for (std::size_t i = 0; i < rep.cutsets.size(); ++i)
    for (std::size_t j = i + 1; j < rep.cutsets.size(); ++j) {
      std::vector<VertexId> common;
      std::set_intersection(rep.cutsets[i].cutset.begin(), rep.cutsets[i].cutset.end(),
                            rep.cutsets[j].cutset.begin(), rep.cutsets[j].cutset.end(), std::back_inserter(common));
      if (!common.empty()) rep.disjointness_verified = false;
    }
  rep.separation_verified = std::all_of(rep.cutsets.begin(), rep.cutsets.end(), [](const auto& c) { return c.separates; });
  for (const auto& c : rep.cutsets)
    if (c.size > 0) rep.partial_sum += 1.0 / c.size;
  return rep;
}

}  // namespace planesep
