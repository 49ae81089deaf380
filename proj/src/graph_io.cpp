#include "planesep/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace planesep {

using ordered_json = nlohmann::ordered_json;

std::string write_graph(const PlanarEmbeddedGraph& g) {
  // Written by hand: ordered_json object insertion is linear per key.
  const VertexId n = g.num_vertices();
  std::string out = "{\"vertices\":[";
  for (VertexId v = 0; v < n; ++v) {
    if (v) out += ',';
    out += std::to_string(v);
  }
  out += "],\"rotations\":{";
  for (VertexId v = 0; v < n; ++v) {
    if (v) out += ',';
    out += '"' + std::to_string(v) + "\":[";
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(nb[i]);
    }
    out += ']';
  }
  const auto [o, h] = g.outer_face_dart();
  out += "},\"outer_face_dart\":[" + std::to_string(o) + ',' + std::to_string(h) + "]}\n";
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError("graph JSON at " + where + ": " + what);
}

VertexId as_vertex(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer vertex id");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > std::numeric_limits<VertexId>::max()) fail(where, "vertex id out of range");
  return static_cast<VertexId>(v);
}

}  // namespace

PlanarEmbeddedGraph read_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph JSON parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("/", "expected an object");
  for (const char* key : {"vertices", "rotations", "outer_face_dart"})
    if (!doc.contains(key)) fail("/", std::string("missing key \"") + key + "\"");

  const auto& verts = doc["vertices"];
  if (!verts.is_array()) fail("/vertices", "expected an array");
  const auto n = static_cast<VertexId>(verts.size());
  std::vector<char> listed(n, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    const VertexId v = as_vertex(verts[i], where);
    if (v >= n) fail(where, "vertex ids must be exactly 0..N-1");
    if (listed[v]) fail(where, "duplicate vertex " + std::to_string(v));
    listed[v] = 1;
  }

  const auto& rots = doc["rotations"];
  if (!rots.is_object()) fail("/rotations", "expected an object");
  std::vector<std::vector<VertexId>> rotation(n);
  std::vector<char> seen(n, 0);
  for (auto it = rots.begin(); it != rots.end(); ++it) {
    const std::string where = "/rotations/" + it.key();
    VertexId v = -1;
    try {
      std::size_t used = 0;
      const long parsed = std::stol(it.key(), &used);
      if (used != it.key().size() || parsed < 0 || parsed >= n) throw std::out_of_range("id");
      v = static_cast<VertexId>(parsed);
    } catch (const std::exception&) {
      fail(where, "key is not a listed vertex id");
    }
    if (!it.value().is_array()) fail(where, "expected an array of neighbours");
    seen[v] = 1;
    for (std::size_t i = 0; i < it.value().size(); ++i) {
      const std::string at = where + "/" + std::to_string(i);
      const VertexId w = as_vertex(it.value()[i], at);
      if (w >= n) fail(at, "neighbor " + std::to_string(w) + " is not a vertex");
      rotation[v].push_back(w);
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (!seen[v]) fail("/rotations", "no rotation for vertex " + std::to_string(v));

  const auto& od = doc["outer_face_dart"];
  if (!od.is_array() || od.size() != 2) fail("/outer_face_dart", "expected [origin, head]");
  const VertexId o = as_vertex(od[0], "/outer_face_dart/0");
  const VertexId h = as_vertex(od[1], "/outer_face_dart/1");
  try {
    return PlanarEmbeddedGraph::from_rotations(std::move(rotation), {o, h});
  } catch (const InputError& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
}

PlanarEmbeddedGraph load_graph_file(const std::string& path) { return read_graph(load_text_file(path)); }

std::string load_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string write_manifest(const std::vector<ManifestEntry>& entries) {
  ordered_json doc = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json j;
    j["file"] = e.file;
    j["family"] = std::string(to_string(e.spec.family));
    j["params"] = {{"width", e.spec.width},       {"height", e.spec.height}, {"size", e.spec.size},
                   {"arms", e.spec.arms},         {"length", e.spec.length}, {"branching", e.spec.branching},
                   {"depth", e.spec.depth},       {"rule", e.spec.rule},     {"iterations", e.spec.iterations}};
    j["seed"] = e.spec.seed;
    j["center"] = e.center;
    j["vertices"] = e.vertices;
    j["c_hat"] = e.c_hat;
    j["d_hat"] = e.d_hat;
    j["excluded"] = e.excluded;
    if (e.excluded) j["reason"] = e.reason;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace planesep
