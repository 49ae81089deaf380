#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "planesep/cutset.hpp"
#include "planesep/graph.hpp"

namespace planesep {

// ---------------------------------------------------------------------------
// Doubling and growth
// ---------------------------------------------------------------------------

struct DoublingSample {
  VertexId a = kNoVertex;  // center of the 2n-ball (largest volume)
  VertexId b = kNoVertex;  // center of the n-ball (smallest volume)
  int n = 0;
  std::int64_t volume_2n = 0;
  std::int64_t volume_n = 0;
  double ratio = 0.0;
};

struct DoublingEstimate {
  double c_hat = 1.0;
  std::vector<DoublingSample> samples;  // one per horizon-valid radius
  int n_min = 0;
  int n_max = 0;
  std::size_t centers_used = 0;
};

/// Which centers take part. Empty `centers` means every vertex. When
/// centers x radii exceeds `budget`, a seeded subset of centers is used.
struct CenterSpec {
  std::vector<VertexId> centers;
  std::size_t budget = 1'000'000;
  std::uint64_t seed = 0;
};

/// C_hat = max over radii n of max_a V(a,2n) / min_b V(b,n), over centers
/// whose 2n-ball stays inside the horizon. Radii without such a center are
/// dropped; PreconditionError when none is left.
DoublingEstimate doubling_constant(const PlanarEmbeddedGraph& g, const CenterSpec& centers,
                                   std::span<const int> radii);

/// Estimate used by find_cutset when no constant is supplied: v plus up to
/// 32 seeded centers from B(v, 4n), radii 1..n.
DoublingEstimate local_doubling_estimate(const PlanarEmbeddedGraph& g, VertexId v, int n);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

/// Least-squares line through (log x, log y). Needs at least two distinct x.
LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y);

struct GrowthFit {
  LogLogFit fit;
  std::vector<int> radii;
  std::vector<std::int64_t> volumes;
};

/// Slope of log V(v,n) against log n. Needs >= 4 distinct horizon-valid radii >= 1.
GrowthFit growth_exponent(const PlanarEmbeddedGraph& g, VertexId v, std::span<const int> radii);

/// Least k with V(v,k) >= n among horizon-valid radii.
int phi(const PlanarEmbeddedGraph& g, VertexId v, std::int64_t n);

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

struct VertexCut {
  std::vector<VertexId> cut;  // sorted
  int size = 0;
};

/// Minimum set of vertices at distance in (n, m] from v whose removal
/// disconnects B(v,n) from every vertex outside B(v,m). Unit vertex
/// capacities, max-flow with vertex splitting; the cut is rechecked by a
/// reachability search before it is returned.
VertexCut min_vertex_cut(const PlanarEmbeddedGraph& g, VertexId v, int n, int m);

enum class ProfileMode : std::uint8_t { exact_bruteforce, constructed_upper };
std::string_view to_string(ProfileMode m);

struct ProfileEntry {
  std::int64_t n = 0;
  std::int64_t value = 0;        // I(n) exactly, or |boundary| of a constructed domain
  int phi_n = 0;
  double alpha_ratio = 0.0;      // value / phi_n, 0 when phi_n == 0
  std::int64_t omega_size = 0;   // size of the witnessing domain
};

struct ProfileTable {
  ProfileMode mode = ProfileMode::exact_bruteforce;
  VertexId center = kNoVertex;
  std::vector<ProfileEntry> entries;
};

inline constexpr int kBruteProfileMaxVertices = 18;

/// Exact isoperimetric profile I(n) = min |boundary(Omega)| over nonempty
/// vertex sets with |Omega| <= n, for n = 1..n_max, by enumerating every
/// subset. phi is measured at `center`.
ProfileTable brute_profile(const PlanarEmbeddedGraph& g, int n_max, VertexId center = 0,
                           int max_vertices = kBruteProfileMaxVertices);

/// For each n: runs find_cutset at radius max(1, phi(n)) and records the
/// boundary size as an upper bound for I(|Omega|), with the ratio to phi(n).
ProfileTable corollary_check(const PlanarEmbeddedGraph& g, VertexId v, std::span<const std::int64_t> n_values,
                             const CutsetOptions& options = {});

}  // namespace planesep
