#pragma once

#include <cstdint>
#include <vector>

#include "planesep/cutset.hpp"
#include "planesep/graph.hpp"

namespace planesep {

struct WalkReport {
  VertexId center = kNoVertex;
  int horizon_radius = 0;          // walks reaching this distance are censored
  std::vector<std::int64_t> times;  // 0 followed by a geometric grid up to t_max
  std::vector<double> mean_displacement;
  double alpha_hat = 0.0;
  double fit_t_min = 0.0;  // fit window, the middle decade of log t
  double fit_t_max = 0.0;
  int trials = 0;
  int censored = 0;
  double censored_fraction = 0.0;
  std::uint64_t seed = 0;
};

/// Simple random walks from v. Trial i draws from its own generator seeded
/// with (seed, i), so results do not depend on `threads`. Throws
/// PreconditionError when v is a horizon vertex or every walk is censored.
WalkReport srw_displacement(const PlanarEmbeddedGraph& g, VertexId v, std::int64_t t_max, int trials,
                            std::uint64_t seed, int threads = 0);

struct NashWilliamsCutset {
  int n = 0;
  int size = 0;
  CutsetCase kind = CutsetCase::trivial;
  bool separates = false;  // v's component in G - C misses the horizon
  std::vector<VertexId> cutset;
};

struct NashWilliamsReport {
  VertexId center = kNoVertex;
  int factor = 6;
  std::vector<NashWilliamsCutset> cutsets;
  double partial_sum = 0.0;
  bool disjointness_verified = false;
  bool separation_verified = false;
};

/// Cutsets C_k = boundary of find_cutset(g, v, n_k) with n_1 = 1 and
/// n_{k+1} = factor * n_k + 1. Disjointness and separation are rechecked
/// here; the partial sum of 1/|C_k| is reported as is.
NashWilliamsReport nash_williams(const PlanarEmbeddedGraph& g, VertexId v, int k_max, int factor = 6,
                                 const CutsetOptions& options = {});

}  // namespace planesep
