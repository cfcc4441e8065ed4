#pragma once

/// \file io.hpp
/// JSON instance files. One format covers every stage:
///
///   {
///     "graph": {"vertices": 5, "rotation": [[3, 4, 1], ...], "outer": [0, 1, 2, 3]},
///     "rel": [[2, 3, "L1"], [4, 0, "L1"], ...],
///     "fixed": {"4": ["1", "1", "2", "2"]},
///     "dual": [["1", "2", "3", "3"], ...],
///     "metadata": {"name": "g0", "seed": 7}
///   }
///
/// "outer" lists north, east, south, west. Rectangles are [x1, y1, x2, y2]
/// with coordinates given as integers or strings like "3/2" or "0.25".
/// Only "graph" is required. Unknown keys are errors.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "recdual/errors.hpp"
#include "recdual/geometry.hpp"
#include "recdual/plane_graph.hpp"
#include "recdual/rel.hpp"

namespace recdual {

struct InstanceFile {
  PlaneGraph graph;
  std::optional<Rel> rel;
  PartialDual fixed;
  std::optional<Dual> dual;
  std::optional<std::string> name;
  std::optional<std::int64_t> seed;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw InvalidInput("unknown field \"" + k + "\" in " + where);
  }
}

inline std::int64_t json_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InvalidInput(where + " must be an integer");
  return j.get<std::int64_t>();
}

inline Rational json_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw InvalidInput(where + " must be an integer or a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

inline Rect json_rect(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) throw InvalidInput(where + " must be [x1, y1, x2, y2]");
  Rational c[4];
  for (int i = 0; i < 4; ++i) c[i] = json_rational(j[i], where);
  Rect r{c[0], c[2], c[1], c[3]};
  if (!r.nondegenerate()) throw InvalidInput(where + " is degenerate");
  return r;
}

inline Json rect_json(const Rect& r) { return Json::array({r.x1.str(), r.y1.str(), r.x2.str(), r.y2.str()}); }

inline VertexId vertex_id(std::int64_t v, int n, const std::string& where) {
  if (v < 0 || v >= n) throw InvalidInput(where + ": vertex " + std::to_string(v) + " out of range");
  return static_cast<VertexId>(v);
}

}  // namespace detail

inline PlaneGraph graph_from_json(const nlohmann::ordered_json& j) {
  detail::only_keys(j, {"vertices", "rotation", "outer"}, "graph");
  if (!j.contains("rotation") || !j["rotation"].is_array()) throw InvalidInput("graph.rotation must be an array");
  const auto& rj = j["rotation"];
  const int n = static_cast<int>(rj.size());
  if (j.contains("vertices") && detail::json_int(j["vertices"], "graph.vertices") != n)
    throw InvalidInput("graph.vertices does not match the rotation lists");
  std::vector<std::vector<VertexId>> rot(n);
  for (int v = 0; v < n; ++v) {
    const std::string where = "graph.rotation[" + std::to_string(v) + "]";
    if (!rj[v].is_array()) throw InvalidInput(where + " must be an array");
    for (const auto& w : rj[v]) rot[v].push_back(detail::vertex_id(detail::json_int(w, where), n, where));
  }
  OuterQuad o;
  if (j.contains("outer")) {
    const auto& oj = j["outer"];
    if (!oj.is_array() || oj.size() != 4) throw InvalidInput("graph.outer must list north, east, south, west");
    VertexId q[4];
    for (int i = 0; i < 4; ++i) q[i] = detail::vertex_id(detail::json_int(oj[i], "graph.outer"), n, "graph.outer");
    o = OuterQuad{q[0], q[1], q[2], q[3]};
  }
  return PlaneGraph(rot, o);
}

inline nlohmann::ordered_json graph_to_json(const PlaneGraph& g) {
  const OuterQuad& o = g.outer();
  return {{"vertices", g.vertex_count()},
          {"rotation", g.rotation()},
          {"outer", {o.north, o.east, o.south, o.west}}};
}

inline Rel rel_from_json(const nlohmann::ordered_json& j, int n) {
  if (!j.is_array()) throw InvalidInput("rel must be an array");
  std::vector<LabeledEdge> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_string()) throw InvalidInput("rel entries are [from, to, \"L1\"|\"L2\"]");
    const std::string layer = e[2].get<std::string>();
    if (layer != "L1" && layer != "L2") throw InvalidInput("unknown layer \"" + layer + "\"");
    edges.push_back({detail::vertex_id(detail::json_int(e[0], "rel"), n, "rel"),
                     detail::vertex_id(detail::json_int(e[1], "rel"), n, "rel"),
                     layer == "L1" ? Layer::kVertical : Layer::kHorizontal});
  }
  return Rel(std::move(edges));
}

inline nlohmann::ordered_json rel_to_json(const Rel& rel) {
  auto out = nlohmann::ordered_json::array();
  for (const LabeledEdge& e : rel.edges) out.push_back({e.from, e.to, layer_name(e.layer)});
  return out;
}

inline PartialDual partial_from_json(const nlohmann::ordered_json& j, int n) {
  if (!j.is_object()) throw InvalidInput("fixed must be an object keyed by vertex id");
  PartialDual p;
  for (const auto& [k, v] : j.items()) {
    std::int64_t id = 0;
    std::size_t used = 0;
    try {
      id = std::stoll(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != k.size()) throw InvalidInput("fixed key \"" + k + "\" is not a vertex id");
    p.fixed[detail::vertex_id(id, n, "fixed")] = detail::json_rect(v, "fixed[" + k + "]");
  }
  return p;
}

inline nlohmann::ordered_json partial_to_json(const PartialDual& p) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& [v, r] : p.fixed) out[std::to_string(v)] = detail::rect_json(r);
  return out;
}

inline Dual dual_from_json(const nlohmann::ordered_json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw InvalidInput("dual must list one rectangle per vertex");
  Dual d;
  for (int v = 0; v < n; ++v) d.rects.push_back(detail::json_rect(j[v], "dual[" + std::to_string(v) + "]"));
  return d;
}

inline nlohmann::ordered_json dual_to_json(const Dual& d) {
  auto out = nlohmann::ordered_json::array();
  for (const Rect& r : d.rects) out.push_back(detail::rect_json(r));
  return out;
}

inline InstanceFile instance_from_json(const nlohmann::ordered_json& j) {
  detail::only_keys(j, {"graph", "rel", "fixed", "dual", "metadata"}, "instance");
  if (!j.contains("graph")) throw InvalidInput("missing field \"graph\"");
  InstanceFile f;
  f.graph = graph_from_json(j["graph"]);
  const int n = f.graph.vertex_count();
  if (j.contains("rel")) f.rel = rel_from_json(j["rel"], n);
  if (j.contains("fixed")) f.fixed = partial_from_json(j["fixed"], n);
  if (j.contains("dual")) f.dual = dual_from_json(j["dual"], n);
  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    detail::only_keys(m, {"name", "seed"}, "metadata");
    if (m.contains("name")) {
      if (!m["name"].is_string()) throw InvalidInput("metadata.name must be a string");
      f.name = m["name"].get<std::string>();
    }
    if (m.contains("seed")) f.seed = detail::json_int(m["seed"], "metadata.seed");
  }
  return f;
}

inline nlohmann::ordered_json instance_to_json(const InstanceFile& f) {
  nlohmann::ordered_json j;
  j["graph"] = graph_to_json(f.graph);
  if (f.rel) j["rel"] = rel_to_json(*f.rel);
  if (!f.fixed.fixed.empty()) j["fixed"] = partial_to_json(f.fixed);
  if (f.dual) j["dual"] = dual_to_json(*f.dual);
  if (f.name || f.seed) {
    auto& m = j["metadata"] = nlohmann::ordered_json::object();
    if (f.name) m["name"] = *f.name;
    if (f.seed) m["seed"] = *f.seed;
  }
  return j;
}

/// Throws InvalidInput on malformed JSON or schema errors.
inline InstanceFile parse_instance(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

inline std::string serialize_instance(const InstanceFile& f) { return instance_to_json(f).dump(2) + "\n"; }

}  // namespace recdual
