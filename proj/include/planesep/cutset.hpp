#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planesep/bfs.hpp"
#include "planesep/contour.hpp"
#include "planesep/graph.hpp"
#include "planesep/net.hpp"
#include "planesep/winding.hpp"

namespace planesep {

/// Which branch of the construction produced the domain.
enum class CutsetCase : std::uint8_t {
  trivial,    // distance-4n contour vertices pairwise far apart: Omega = B(v, 4n)
  two_point,  // the minimal arc carries no other distance-4n vertex: cut along gamma
  connected,  // proximity graph on the net is connected: one chord delta
  iterative,  // several components, patched one after another
};

std::string_view to_string(CutsetCase c);
CutsetCase parse_cutset_case(std::string_view s);

enum class PathRole : std::uint8_t { gamma, delta, arc };

std::string_view to_string(PathRole r);
PathRole parse_path_role(std::string_view s);

/// A vertex path of the separating curve. `gamma` and `delta` paths are
/// removed from the host to carve out Omega; `arc` paths are contour pieces
/// kept only for diagnostics.
struct CurvePath {
  PathRole role = PathRole::gamma;
  std::vector<VertexId> vertices;
};

/// Deterministic tie-breaking knobs. Variant 0 is the canonical one; the
/// construction falls back to the others when a splice check fails.
struct TieBreak {
  PathTieBreak geodesic = PathTieBreak::smallest_id;
  ScanOrder net_order = ScanOrder::ascending_id;
  bool short_chords = false;  // hop to the nearest forward anchor instead of the furthest
  PathTieBreak connector = PathTieBreak::smallest_id;

  static TieBreak variant(int k);
};

struct CutsetDiagnostics {
  int tie_break_variant = 0;
  int sphere_count = 0;      // distance-4n vertices on the contour
  int contour_length = 0;
  VertexId base_a = kNoVertex;
  VertexId base_b = kNoVertex;
  int base_weight = 0;
  std::vector<int> net_sizes;        // |N|, |N_1|, ...
  std::vector<int> component_sizes;  // component sizes of the first proximity graph
  std::vector<int> splice_parities;  // parity of every intermediate closed curve
  std::vector<std::string> rejected_variants;
  std::vector<Net> nets;  // the nets behind net_sizes; not serialised
};

struct CutsetResult {
  VertexId v = kNoVertex;
  int n = 0;
  CutsetCase kind = CutsetCase::trivial;
  std::vector<VertexId> omega;     // sorted
  std::vector<VertexId> boundary;  // sorted
  std::vector<CurvePath> curve_paths;
  double doubling_constant = 0.0;
  std::int64_t bound_used = 0;
  bool curve_is_simple = false;
  CutsetDiagnostics diagnostics;

  double ratio() const { return n > 0 ? static_cast<double>(boundary.size()) / n : 0.0; }
  /// Sorted union of the gamma and delta path vertices.
  std::vector<VertexId> removed_vertices() const;
};

/// floor((C^4 + 1)(2n + 1)).
std::int64_t cutset_bound(double doubling_constant, int n);

/// The minimal-weight base pair and its arc S1 = contour positions
/// arc_start, arc_start+1, ..., arc_end (cyclically). `a` sits at arc_start,
/// `b` at arc_end and `gamma` runs from a to b.
struct BasePair {
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;
  std::vector<VertexId> gamma;
  int arc_start = 0;
  int arc_end = 0;
  int weight = 0;
};

/// Scans all pairs of distance-4n contour vertices at distance <= 2n+1, closes
/// each split of the contour with the pair's canonical geodesic, keeps the arc
/// with winding parity 1 and returns the one of least weight (ties: smaller
/// pair ids). Returns nullopt when no pair is close enough.
std::optional<BasePair> choose_base_pair(const PlanarEmbeddedGraph& g, const ContourParametrization& contour,
                                         VertexId v, int n, const DualRay& ray,
                                         PathTieBreak tie = PathTieBreak::smallest_id);

struct CutsetOptions {
  /// Doubling constant for the boundary budget; estimated around v when absent.
  std::optional<double> doubling_constant;
  /// Alternative tie-break variants tried after the canonical one fails.
  int max_alternatives = 8;
};

/// Builds a domain Omega with B(v,n) in Omega, boundary inside B(v,6n) and
/// |boundary| <= (C^4+1)(2n+1), separated from the horizon.
///
/// Requires n >= 1 and B(v, 4n) strictly inside the horizon (PreconditionError
/// otherwise). Every result is checked with verify_cutset before it is
/// returned; VerificationError when no tie-break variant passes.
CutsetResult find_cutset(const PlanarEmbeddedGraph& g, VertexId v, int n, const CutsetOptions& options = {});

struct ClauseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<ClauseResult> clauses;
  double ratio = 0.0;
  bool curve_is_simple = false;

  bool passed() const;
  const ClauseResult* clause(std::string_view name) const;
};

/// Rechecks a result from scratch: ball containment, connectivity, the
/// reported boundary, the 6n annulus, separation from the horizon, the size
/// budget and that the boundary lies on the removed curve. When
/// `doubling_constant` is given the budget is recomputed from it.
VerificationReport verify_cutset(const PlanarEmbeddedGraph& g, VertexId v, int n, const CutsetResult& result,
                                 std::optional<double> doubling_constant = std::nullopt);

}  // namespace planesep
