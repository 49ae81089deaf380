#include "planesep/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>

namespace planesep {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::grid: return "grid";
    case Family::triangular: return "triangular";
    case Family::hexagonal: return "hexagonal";
    case Family::spider: return "spider";
    case Family::tree: return "tree";
    case Family::substitution: return "substitution";
  }
  return "grid";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::grid, Family::triangular, Family::hexagonal, Family::spider, Family::tree,
                   Family::substitution})
    if (to_string(f) == s) return f;
  throw InputError("unknown family '" + std::string(s) + "'");
}

namespace {

constexpr long kMaxVertices = 8'000'000;

struct Drawing {
  std::vector<Point> points;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("invalid family parameters: " + what);
}

Drawing grid_drawing(int w, int h) {
  require(w >= 1 && h >= 1 && static_cast<long>(w) * h >= 2, "grid needs width, height >= 1 and at least 2 vertices");
  require(static_cast<long>(w) * h <= kMaxVertices, "grid too large");
  Drawing d;
  d.points.reserve(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) d.points.push_back({double(x), double(y)});
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const VertexId id = y * w + x;
      if (x + 1 < w) d.edges.emplace_back(id, id + 1);
      if (y + 1 < h) d.edges.emplace_back(id, id + w);
    }
  return d;
}

Drawing hexagonal_drawing(int w, int h) {
  require(w >= 2 && h >= 2, "hexagonal needs width, height >= 2");
  require(static_cast<long>(w) * h <= kMaxVertices, "hexagonal patch too large");
  Drawing d;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) d.points.push_back({double(x), double(y)});
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const VertexId id = y * w + x;
      if (x + 1 < w) d.edges.emplace_back(id, id + 1);
      if (y + 1 < h && (x + y) % 2 == 0) d.edges.emplace_back(id, id + w);
    }
  return d;
}

Drawing triangular_drawing(int radius) {
  require(radius >= 1 && radius <= 1500, "triangular needs 1 <= size <= 1500");
  Drawing d;
  std::map<std::pair<int, int>, VertexId> index;
  for (int r = -radius; r <= radius; ++r) {
    for (int q = std::max(-radius, -r - radius); q <= std::min(radius, -r + radius); ++q) {
      index[{q, r}] = static_cast<VertexId>(d.points.size());
      d.points.push_back({q + r / 2.0, r * std::numbers::sqrt3 / 2.0});
    }
  }
  for (const auto& [qr, id] : index) {
    const auto [q, r] = qr;
    for (auto [dq, dr] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{-1, 1}}) {
      auto it = index.find({q + dq, r + dr});
      if (it != index.end()) d.edges.emplace_back(id, it->second);
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

Drawing spider_drawing(int arms, int length) {
  require(arms >= 1 && length >= 1, "spider needs arms, length >= 1");
  require(static_cast<long>(arms) * length < kMaxVertices, "spider too large");
  Drawing d;
  d.points.push_back({0, 0});
  for (int j = 0; j < arms; ++j) {
    const double angle = 2 * std::numbers::pi * j / arms;
    for (int i = 1; i <= length; ++i) {
      const VertexId id = 1 + j * length + (i - 1);
      d.points.push_back({i * std::cos(angle), i * std::sin(angle)});
      d.edges.emplace_back(i == 1 ? 0 : id - 1, id);
    }
  }
  return d;
}

Drawing substitution_drawing(int rule, int iterations, std::uint64_t seed) {
  require(rule == 0 || rule == 1, "substitution rule must be 0 or 1");
  require(iterations >= 0 && iterations <= (rule == 0 ? 9 : 12), "substitution iterations out of range");
  Drawing d;
  d.points = {{0, 0}, {1, 0}, {0.5, std::numbers::sqrt3 / 2}};
  std::vector<std::array<VertexId, 3>> tris{{0, 1, 2}};
  std::mt19937_64 rng(seed);
  for (int it = 0; it < iterations; ++it) {
    std::vector<std::array<VertexId, 3>> next;
    if (rule == 0) {
      std::map<std::pair<VertexId, VertexId>, VertexId> mid;
      auto midpoint = [&](VertexId a, VertexId b) {
        const auto key = std::minmax(a, b);
        auto found = mid.find(key);
        if (found != mid.end()) return found->second;
        const VertexId id = static_cast<VertexId>(d.points.size());
        d.points.push_back({(d.points[a].x + d.points[b].x) / 2, (d.points[a].y + d.points[b].y) / 2});
        mid.emplace(key, id);
        return id;
      };
      for (const auto& t : tris) {
        const VertexId ab = midpoint(t[0], t[1]);
        const VertexId bc = midpoint(t[1], t[2]);
        const VertexId ca = midpoint(t[2], t[0]);
        next.push_back({t[0], ab, ca});
        next.push_back({ab, t[1], bc});
        next.push_back({ca, bc, t[2]});
        next.push_back({ab, bc, ca});
      }
    } else {
      for (const auto& t : tris) {
        if ((rng() & 1) == 0) {
          next.push_back(t);
          continue;
        }
        const VertexId c = static_cast<VertexId>(d.points.size());
        d.points.push_back({(d.points[t[0]].x + d.points[t[1]].x + d.points[t[2]].x) / 3,
                            (d.points[t[0]].y + d.points[t[1]].y + d.points[t[2]].y) / 3});
        next.push_back({t[0], t[1], c});
        next.push_back({t[1], t[2], c});
        next.push_back({t[2], t[0], c});
      }
    }
    tris = std::move(next);
  }
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i) d.edges.push_back(std::minmax(t[i], t[(i + 1) % 3]));
  std::sort(d.edges.begin(), d.edges.end());
  d.edges.erase(std::unique(d.edges.begin(), d.edges.end()), d.edges.end());
  return d;
}

Drawing drawing_for(const FamilySpec& s) {
  switch (s.family) {
    case Family::grid: return grid_drawing(s.width, s.height);
    case Family::hexagonal: return hexagonal_drawing(s.width, s.height);
    case Family::triangular: return triangular_drawing(s.size);
    case Family::spider: return spider_drawing(s.arms, s.length);
    case Family::substitution: return substitution_drawing(s.rule, s.iterations, s.seed);
    case Family::tree: break;
  }
  return {};
}

PlanarEmbeddedGraph complete_tree(int branching, int depth) {
  require(branching >= 1 && depth >= 1, "tree needs branching, depth >= 1");
  long count = 1;
  long level = 1;
  for (int i = 0; i < depth; ++i) {
    level *= branching;
    count += level;
    require(count <= kMaxVertices, "tree too large");
  }
  std::vector<std::vector<VertexId>> rot(count);
  for (long i = 1; i < count; ++i) {
    const long parent = (i - 1) / branching;
    rot[i].push_back(static_cast<VertexId>(parent));
    rot[parent].push_back(static_cast<VertexId>(i));
  }
  return PlanarEmbeddedGraph::from_rotations(std::move(rot), {0, 1});
}

}  // namespace

PlanarEmbeddedGraph from_straight_line(const std::vector<Point>& points,
                                       const std::vector<std::pair<VertexId, VertexId>>& edges) {
  const auto n = static_cast<VertexId>(points.size());
  std::vector<std::vector<VertexId>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto angle = [&](VertexId w) { return std::atan2(points[w].y - points[v].y, points[w].x - points[v].x); };
    std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) { return angle(a) < angle(b); });
  }
  if (edges.empty()) throw InputError("drawing has no edges");
  const auto provisional = PlanarEmbeddedGraph::from_rotations(rot, edges.front());
  FaceId best = 0;
  double best_area = -1e300;
  for (FaceId f = 0; f < provisional.num_faces(); ++f) {
    double area = 0;
    for (DartId d : provisional.face_darts(f)) {
      const Point& p = points[provisional.origin(d)];
      const Point& q = points[provisional.head(d)];
      area += p.x * q.y - q.x * p.y;
    }
    if (area > best_area + 1e-9) {
      best_area = area;
      best = f;
    }
  }
  const DartId d = provisional.face_darts(best).front();
  return PlanarEmbeddedGraph::from_rotations(std::move(rot), {provisional.origin(d), provisional.head(d)});
}

PlanarEmbeddedGraph generate(const FamilySpec& spec) {
  if (spec.family == Family::tree) return complete_tree(spec.branching, spec.depth);
  const Drawing d = drawing_for(spec);
  return from_straight_line(d.points, d.edges);
}

std::vector<Point> family_layout(const FamilySpec& spec) {
  if (spec.family == Family::tree) return {};
  return drawing_for(spec).points;
}

VertexId central_vertex(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::grid:
    case Family::hexagonal: return (spec.height / 2) * spec.width + spec.width / 2;
    case Family::triangular: {
      // Rows r = -R..R; the middle row starts after the rows above it.
      const int R = spec.size;
      VertexId id = 0;
      for (int r = -R; r < 0; ++r) id += std::min(R, -r + R) - std::max(-R, -r - R) + 1;
      return id + R;  // q runs from -R in the middle row
    }
    case Family::spider:
    case Family::tree: return 0;
    case Family::substitution: {
      const auto pts = family_layout(spec);
      const Point c{0.5, std::numbers::sqrt3 / 6};
      VertexId best = 0;
      double bd = 1e300;
      for (VertexId i = 0; i < static_cast<VertexId>(pts.size()); ++i) {
        const double dd = std::hypot(pts[i].x - c.x, pts[i].y - c.y);
        if (dd < bd) {
          bd = dd;
          best = i;
        }
      }
      return best;
    }
  }
  return 0;
}

}  // namespace planesep
