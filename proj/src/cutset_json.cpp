#include "planesep/cutset_json.hpp"

#include <json.hpp>

namespace planesep {

using ordered_json = nlohmann::ordered_json;

std::string cutset_to_json(const CutsetResult& r) {
  ordered_json j;
  j["case"] = std::string(to_string(r.kind));
  j["n"] = r.n;
  j["v"] = r.v;
  j["omega_size"] = r.omega.size();
  j["boundary_size"] = r.boundary.size();
  j["bound_used"] = r.bound_used;
  j["ratio"] = r.ratio();
  j["curve_is_simple"] = r.curve_is_simple;
  ordered_json paths = ordered_json::array();
  ordered_json roles = ordered_json::array();
  for (const auto& p : r.curve_paths) {
    paths.push_back(p.vertices);
    roles.push_back(std::string(to_string(p.role)));
  }
  j["paths"] = std::move(paths);
  j["path_roles"] = std::move(roles);
  j["doubling_constant"] = r.doubling_constant;
  j["omega"] = r.omega;
  j["boundary"] = r.boundary;
  const auto& d = r.diagnostics;
  j["diagnostics"] = {{"tie_break_variant", d.tie_break_variant},
                      {"sphere_count", d.sphere_count},
                      {"contour_length", d.contour_length},
                      {"base_a", d.base_a},
                      {"base_b", d.base_b},
                      {"base_weight", d.base_weight},
                      {"net_sizes", d.net_sizes},
                      {"component_sizes", d.component_sizes},
                      {"splice_parities", d.splice_parities},
                      {"rejected_variants", d.rejected_variants}};
  return j.dump(2) + "\n";
}

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("cutset JSON: missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("cutset JSON at /") + key + ": wrong type");
  }
}

}  // namespace

CutsetResult cutset_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("cutset JSON parse error at byte ") + std::to_string(e.byte));
  }
  if (!j.is_object()) throw InputError("cutset JSON: expected an object");
  CutsetResult r;
  r.kind = parse_cutset_case(field<std::string>(j, "case"));
  r.n = field<int>(j, "n");
  r.v = field<VertexId>(j, "v");
  r.bound_used = field<std::int64_t>(j, "bound_used");
  r.curve_is_simple = field<bool>(j, "curve_is_simple");
  r.doubling_constant = field<double>(j, "doubling_constant");
  r.omega = field<std::vector<VertexId>>(j, "omega");
  r.boundary = field<std::vector<VertexId>>(j, "boundary");
  const auto paths = field<std::vector<std::vector<VertexId>>>(j, "paths");
  const auto roles = field<std::vector<std::string>>(j, "path_roles");
  if (roles.size() != paths.size()) throw InputError("cutset JSON: paths and path_roles differ in length");
  for (std::size_t i = 0; i < paths.size(); ++i) r.curve_paths.push_back({parse_path_role(roles[i]), paths[i]});
  if (field<std::size_t>(j, "omega_size") != r.omega.size())
    throw InputError("cutset JSON: omega_size does not match omega");
  if (field<std::size_t>(j, "boundary_size") != r.boundary.size())
    throw InputError("cutset JSON: boundary_size does not match boundary");
  if (j.contains("diagnostics")) {
    const auto& d = j["diagnostics"];
    auto& o = r.diagnostics;
    o.tie_break_variant = d.value("tie_break_variant", 0);
    o.sphere_count = d.value("sphere_count", 0);
    o.contour_length = d.value("contour_length", 0);
    o.base_a = d.value("base_a", kNoVertex);
    o.base_b = d.value("base_b", kNoVertex);
    o.base_weight = d.value("base_weight", 0);
    o.net_sizes = d.value("net_sizes", std::vector<int>{});
    o.component_sizes = d.value("component_sizes", std::vector<int>{});
    o.splice_parities = d.value("splice_parities", std::vector<int>{});
    o.rejected_variants = d.value("rejected_variants", std::vector<std::string>{});
  }
  return r;
}

std::string verification_to_json(const VerificationReport& report, VertexId v, int n) {
  ordered_json j;
  j["v"] = v;
  j["n"] = n;
  j["passed"] = report.passed();
  j["ratio"] = report.ratio;
  j["curve_is_simple"] = report.curve_is_simple;
  ordered_json clauses = ordered_json::array();
  for (const auto& c : report.clauses)
    clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["clauses"] = std::move(clauses);
  return j.dump(2) + "\n";
}

}  // namespace planesep
