#include "edgepoly/report_json.hpp"

#include <algorithm>

namespace edgepoly {

namespace {

using nlohmann::json;

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

json rescue_to_json(const Rescue& r) {
  if (std::holds_alternative<NoRescue>(r)) return "none";
  if (std::holds_alternative<EdgeRescue>(r)) return "edge";
  return json{{"vertex", std::get<VertexRescue>(r).j}};
}

Rescue rescue_from_json(const json& j) {
  if (j.is_object()) return VertexRescue{j.at("vertex").get<Vertex>()};
  auto s = j.get<std::string>();
  if (s == "none") return NoRescue{};
  if (s == "edge") return EdgeRescue{};
  throw json::other_error::create(501, "unknown rescue '" + s + "'", &j);
}

}  // namespace

json witness_to_json(const Witness& w) {
  json out{{"kind", witness_kind(w)}, {"vertices", witness_vertices(w)}};
  if (const auto* c2 = std::get_if<C2Witness>(&w)) out["rescue"] = rescue_to_json(c2->rescue);
  return out;
}

Witness witness_from_json(const json& j) {
  auto kind = j.at("kind").get<std::string>();
  auto vertices = j.at("vertices").get<std::array<Vertex, 4>>();
  if (kind == "C1") return C1Witness{vertices};
  if (kind == "C2")
    return C2Witness{vertices, j.contains("rescue") ? rescue_from_json(j.at("rescue")) : Rescue{NoRescue{}}};
  throw json::other_error::create(501, "unknown witness kind '" + kind + "'", &j);
}

json report_to_json(const ClassificationReport& r) {
  json out{{"fano", r.fano},
           {"reflexive_terminal", r.reflexive_terminal},
           {"dim", r.dim},
           {"smooth_qfactorial", r.smooth_qfactorial},
           {"codim2_smooth", r.codim2_smooth},
           {"codim3_qfactorial", r.codim3_qfactorial},
           {"rigid", r.rigid_certified},
           {"witness", r.witness ? witness_to_json(*r.witness) : json(nullptr)},
           {"components", json::array()}};
  for (const auto& c : r.components) out["components"].push_back(report_to_json(c));
  return out;
}

ClassificationReport report_from_json(const json& j) {
  ClassificationReport r;
  r.fano = j.at("fano").get<bool>();
  r.reflexive_terminal = j.at("reflexive_terminal").get<bool>();
  r.dim = j.at("dim").get<int>();
  r.smooth_qfactorial = j.at("smooth_qfactorial").get<bool>();
  r.codim2_smooth = j.at("codim2_smooth").get<bool>();
  r.codim3_qfactorial = j.at("codim3_qfactorial").get<bool>();
  r.rigid_certified = j.at("rigid").get<bool>();
  if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
  for (const auto& c : j.at("components")) r.components.push_back(report_from_json(c));
  return r;
}

json polytope_to_json(const LatticePolytope& p) {
  json out{{"ambient_dim", p.ambient_dim()}, {"dim", p.dim()}, {"vertices", json::array()},
           {"facets", json::array()}};
  for (const auto& v : p.vertices()) out["vertices"].push_back(integers(v));
  if (p.dim() > 0) {
    std::vector<json> facets;
    for (const auto& f : p.facets())
      facets.push_back(json{{"normal", integers(f.normal)}, {"rhs", f.rhs.convert_to<long long>()}});
    std::sort(facets.begin(), facets.end());
    for (auto& f : facets) out["facets"].push_back(std::move(f));
  }
  return out;
}

}  // namespace edgepoly
