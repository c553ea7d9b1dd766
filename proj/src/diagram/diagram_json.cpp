#include <json.hpp>

#include "skein/diagram/diagram.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

using nlohmann::json;

json label_to_json(SurfaceKind kind, const HomologyClass& h) {
  switch (kind) {
    case SurfaceKind::Disk: return nullptr;
    case SurfaceKind::Annulus: return h.a;
    case SurfaceKind::Torus: return json::array({h.a, h.b});
  }
  return nullptr;
}

HomologyClass label_from_json(SurfaceKind kind, const json& j) {
  switch (kind) {
    case SurfaceKind::Disk:
      if (!j.is_null()) throw Error(ErrorCode::ParseError, "disk labels must be null");
      return {};
    case SurfaceKind::Annulus:
      if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, "annulus labels are integers");
      return {j.get<std::int64_t>(), 0};
    case SurfaceKind::Torus:
      if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "torus labels are [a,b]");
      return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  }
  return {};
}

json endpoint_to_json(const Endpoint& e) {
  if (e.is_boundary()) return json::array({"bnd", e.port});
  return json::array({e.crossing, e.port});
}

Endpoint endpoint_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "endpoint must be a pair");
  if (j[0].is_string()) {
    if (j[0] != "bnd") throw Error(ErrorCode::ParseError, "unknown endpoint tag");
    return Endpoint::boundary(j[1].get<int>());
  }
  return Endpoint::at(j[0].get<int>(), j[1].get<int>());
}

}  // namespace

std::string diagram_to_json(const MarkedDiagram& d) {
  json out;
  switch (d.surface.kind) {
    case SurfaceKind::Disk: out["surface"] = {{"kind", {{"disk", d.surface.boundary_points}}}}; break;
    case SurfaceKind::Annulus: out["surface"] = {{"kind", "annulus"}}; break;
    case SurfaceKind::Torus: out["surface"] = {{"kind", "torus"}}; break;
  }
  out["crossings"] = json::array();
  for (int c : d.crossings) out["crossings"].push_back({{"id", c}});
  out["edges"] = json::array();
  for (const auto& e : d.edges) {
    out["edges"].push_back({{"id", e.id},
                            {"tail", endpoint_to_json(e.tail)},
                            {"head", endpoint_to_json(e.head)},
                            {"h", label_to_json(d.surface.kind, e.label)}});
  }
  out["free_loops"] = json::array();
  for (const auto& h : d.free_loops) out["free_loops"].push_back(label_to_json(d.surface.kind, h));
  if (d.is_real() && !d.crossings.empty()) {
    out["marked"] = "all";
  } else {
    out["marked"] = d.marked;
  }
  return out.dump(2);
}

MarkedDiagram diagram_from_json(const std::string& text) {
  MarkedDiagram d;
  try {
    const json in = json::parse(text);
    const json& kind = in.at("surface").at("kind");
    if (kind == "torus") {
      d.surface = SurfaceSpec::torus();
    } else if (kind == "annulus") {
      d.surface = SurfaceSpec::annulus();
    } else if (kind.is_object() && kind.contains("disk")) {
      d.surface = SurfaceSpec::disk(kind.at("disk").get<int>());
    } else {
      throw Error(ErrorCode::ParseError, "unknown surface kind " + kind.dump());
    }
    for (const auto& c : in.at("crossings")) d.crossings.push_back(c.at("id").get<int>());
    for (const auto& e : in.at("edges")) {
      d.edges.push_back({e.at("id").get<int>(), endpoint_from_json(e.at("tail")), endpoint_from_json(e.at("head")),
                         label_from_json(d.surface.kind, e.value("h", json()))});
    }
    for (const auto& h : in.value("free_loops", json::array())) d.free_loops.push_back(label_from_json(d.surface.kind, h));
    const json marked = in.value("marked", json("all"));
    if (marked.is_string()) {
      if (marked != "all") throw Error(ErrorCode::ParseError, "marked must be a list or \"all\"");
      d.marked = d.crossings;
    } else {
      d.marked = marked.get<std::vector<int>>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  d.normalize();
  validate(d);
  return d;
}

}  // namespace skein
