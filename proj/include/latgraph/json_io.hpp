#ifndef LATGRAPH_JSON_IO_HPP
#define LATGRAPH_JSON_IO_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latgraph/families.hpp"
#include "latgraph/matching.hpp"
#include "latgraph/region.hpp"
#include "latgraph/torus.hpp"
#include "latgraph/tree.hpp"

namespace latgraph {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Schema helpers. Violations carry the JSON pointer path of the offender.

namespace jsondetail {

inline const json& need(const json& j, const char* key, const std::string& path) {
  require(j.is_object(), ErrorKind::SchemaError, path + ": expected an object");
  auto it = j.find(key);
  require(it != j.end(), ErrorKind::SchemaError, path + "/" + key + ": missing key");
  return *it;
}

inline const json* maybe(const json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline int as_int(const json& j, const std::string& path) {
  require(j.is_number_integer(), ErrorKind::SchemaError, path + ": expected an integer");
  return j.get<int>();
}

inline const json& as_array(const json& j, const std::string& path) {
  require(j.is_array(), ErrorKind::SchemaError, path + ": expected an array");
  return j;
}

inline Rat rat_from_string(const std::string& s, const std::string& path) {
  try {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(ErrorKind::SchemaError, path + ": expected a rational \"p/q\"");
  }
}

}  // namespace jsondetail

// ---------------------------------------------------------------------------
// Graphs.

inline json graph_to_json(const MultiGraph& g) {
  json doc = json::object();
  doc["vertices"] = json::array();
  for (int v = 0; v < g.nv(); ++v) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (int e = 0; e < g.ne(); ++e)
    doc["edges"].push_back({{"id", e}, {"ends", {g.ends(e).u, g.ends(e).v}}});
  json rot = json::object();
  for (int v = 0; v < g.nv(); ++v) rot[std::to_string(v)] = g.rotation(v);
  doc["rotation"] = std::move(rot);
  if (g.has_pins()) {
    json pinned = json::array();
    for (int e = 0; e < g.ne(); ++e)
      if (auto p = g.pin(e)) {
        int t = *p ? g.ends(e).u : g.ends(e).v;
        pinned.push_back({{"edge", e}, {"tail", t}, {"head", g.other_end(e, t)}});
      }
    doc["pinned"] = std::move(pinned);
  }
  return doc;
}

inline MultiGraph graph_from_json(const json& doc) {
  using jsondetail::as_array;
  using jsondetail::as_int;
  using jsondetail::need;

  const json& jv = as_array(need(doc, "vertices", ""), "/vertices");
  const int nv = static_cast<int>(jv.size());
  for (int v = 0; v < nv; ++v)
    require(jv[v].is_number_integer() && jv[v].get<int>() == v, ErrorKind::SchemaError,
            "/vertices/" + std::to_string(v) + ": vertex ids must be 0..n-1 in order");

  const json& je = as_array(need(doc, "edges", ""), "/edges");
  std::vector<EdgeEnds> edges;
  for (size_t i = 0; i < je.size(); ++i) {
    std::string path = "/edges/" + std::to_string(i);
    require(as_int(need(je[i], "id", path), path + "/id") == static_cast<int>(i),
            ErrorKind::SchemaError, path + "/id: edge ids must be 0..m-1 in order");
    const json& ends = as_array(need(je[i], "ends", path), path + "/ends");
    require(ends.size() == 2, ErrorKind::SchemaError, path + "/ends: expected two endpoints");
    edges.push_back({as_int(ends[0], path + "/ends/0"), as_int(ends[1], path + "/ends/1")});
  }

  std::vector<std::vector<int>> rotation;
  if (const json* jr = jsondetail::maybe(doc, "rotation")) {
    require(jr->is_object(), ErrorKind::SchemaError, "/rotation: expected an object");
    rotation.resize(nv);
    for (int v = 0; v < nv; ++v) {
      std::string path = "/rotation/" + std::to_string(v);
      auto it = jr->find(std::to_string(v));
      require(it != jr->end(), ErrorKind::SchemaError, path + ": missing key");
      const json& list = as_array(*it, path);
      for (size_t i = 0; i < list.size(); ++i)
        rotation[v].push_back(as_int(list[i], path + "/" + std::to_string(i)));
    }
  }

  std::vector<Pin> pins;
  if (const json* jp = jsondetail::maybe(doc, "pinned")) {
    const json& list = as_array(*jp, "/pinned");
    for (size_t i = 0; i < list.size(); ++i) {
      std::string path = "/pinned/" + std::to_string(i);
      int e = as_int(need(list[i], "edge", path), path + "/edge");
      int t = as_int(need(list[i], "tail", path), path + "/tail");
      int h = as_int(need(list[i], "head", path), path + "/head");
      require(0 <= e && e < static_cast<int>(edges.size()), ErrorKind::BadInput,
              path + " references missing edge " + std::to_string(e));
      bool fwd = edges[e].u == t && edges[e].v == h;
      require(fwd || (edges[e].u == h && edges[e].v == t), ErrorKind::BadInput,
              path + " does not match the edge's endpoints");
      pins.push_back({e, fwd});
    }
  }

  return MultiGraph::build(nv, std::move(edges), std::move(rotation), std::move(pins));
}

// ---------------------------------------------------------------------------
// Orientations, heights, factor edge lists.

inline json orientation_to_json(const MultiGraph& g, const Orientation& o) {
  json j = json::object();
  for (int e = 0; e < g.ne(); ++e) {
    int d = oriented_dart(o, e);
    j[std::to_string(e)] = {g.tail(d), g.head(d)};
  }
  return j;
}

inline Orientation orientation_from_json(const MultiGraph& g, const json& j,
                                         const std::string& where) {
  require(j.is_object(), ErrorKind::SchemaError, where + ": expected an object");
  Orientation o(g.ne());
  for (int e = 0; e < g.ne(); ++e) {
    std::string path = where + "/" + std::to_string(e);
    auto it = j.find(std::to_string(e));
    require(it != j.end(), ErrorKind::SchemaError, path + ": missing key");
    const json& pair = jsondetail::as_array(*it, path);
    require(pair.size() == 2, ErrorKind::SchemaError, path + ": expected [tail, head]");
    int t = jsondetail::as_int(pair[0], path + "/0");
    int h = jsondetail::as_int(pair[1], path + "/1");
    bool fwd = g.ends(e).u == t && g.ends(e).v == h;
    require(fwd || (g.ends(e).u == h && g.ends(e).v == t), ErrorKind::BadInput,
            path + " does not match the edge's endpoints");
    o[e] = fwd;
  }
  return o;
}

inline json heights_to_json(const std::vector<Rat>& h) {
  json j = json::object();
  for (size_t v = 0; v < h.size(); ++v) j[std::to_string(v)] = to_string(h[v]);
  return j;
}

// Sorted ids of the edges a 0/1 indicator selects.
inline json edge_set_to_json(const std::vector<char>& m) {
  json j = json::array();
  for (size_t e = 0; e < m.size(); ++e)
    if (m[e]) j.push_back(static_cast<int>(e));
  return j;
}

// ---------------------------------------------------------------------------
// Hasse diagrams: JSON and DOT, covers always written upper -> lower.

inline json covers_to_json(std::vector<std::pair<int, int>> covers) {
  std::sort(covers.begin(), covers.end());
  json j = json::array();
  for (auto [u, l] : covers) j.push_back({u, l});
  return j;
}

inline json hasse_to_json(const Hasse& h) {
  return json{{"size", h.rank.size()},   {"bottom", h.bottom}, {"top", h.top},
              {"graded", h.graded},      {"rank", h.rank},     {"covers", covers_to_json(h.covers)}};
}

inline std::string dot_of_covers(const std::vector<int>& rank,
                                 std::vector<std::pair<int, int>> covers) {
  std::sort(covers.begin(), covers.end());
  std::string out = "digraph hasse {\n";
  for (size_t i = 0; i < rank.size(); ++i)
    out += "  " + std::to_string(i) + " [rank=" + std::to_string(rank[i]) + "];\n";
  for (auto [u, l] : covers) out += "  " + std::to_string(u) + " -> " + std::to_string(l) + ";\n";
  out += "}\n";
  return out;
}

inline std::string hasse_to_dot(const Hasse& h) { return dot_of_covers(h.rank, h.covers); }

// ---------------------------------------------------------------------------
// Instances: the graph plus the data that names its ensemble. A single
// document carries the graph schema keys, an optional "region" (cell
// drawing), an optional "identify" (torus wrap), and a "manifest" with the
// base choices.

struct Instance {
  MultiGraph g;
  std::string family;  // canonical tag, may be empty for hand-written input
  json params = json::object();
  int v_star = -1;
  int f_star = -1;
  std::optional<Orientation> reference;
  std::optional<Bias> bias;  // forward-dart bias per edge
  std::optional<DegreeSpec> degrees;
  std::optional<Region> region;
  std::optional<std::pair<int, int>> identify;  // torus width, height
  std::vector<int> hull;  // counterclockwise outer ring for crossing drawings
};

inline json instance_to_json(const Instance& ins) {
  json doc = graph_to_json(ins.g);
  if (ins.region) {
    json cells = json::array();
    for (auto [x, y] : ins.region->cells) cells.push_back({x, y});
    doc["region"] = {{"kind", ins.region->kind == RegionKind::Squares ? "squares" : "triangles"},
                     {"cells", std::move(cells)}};
  }
  if (ins.identify)
    doc["identify"] = {{"width", ins.identify->first}, {"height", ins.identify->second}};

  json man = json::object();
  if (!ins.family.empty()) man["family"] = ins.family;
  if (!ins.params.empty()) man["params"] = ins.params;
  if (ins.v_star >= 0) man["v_star"] = ins.v_star;
  if (ins.f_star >= 0) man["f_star"] = ins.f_star;
  if (ins.reference) man["reference"] = orientation_to_json(ins.g, *ins.reference);
  if (ins.bias) {
    json b = json::object();
    for (int e = 0; e < ins.g.ne(); ++e) b[std::to_string(e)] = to_string((*ins.bias)[dart_fwd(e)]);
    man["bias"] = std::move(b);
  }
  if (ins.degrees) man["degrees"] = *ins.degrees;
  if (!ins.hull.empty()) man["hull"] = ins.hull;
  doc["manifest"] = std::move(man);
  return doc;
}

namespace jsondetail {

inline bool same_graph(const MultiGraph& a, const MultiGraph& b) {
  if (a.nv() != b.nv() || a.ne() != b.ne()) return false;
  for (int e = 0; e < a.ne(); ++e)
    if (a.ends(e).u != b.ends(e).u || a.ends(e).v != b.ends(e).v) return false;
  for (int v = 0; v < a.nv(); ++v)
    if (a.rotation(v) != b.rotation(v)) return false;
  return true;
}

}  // namespace jsondetail

inline Instance instance_from_json(const json& doc) {
  using jsondetail::as_array;
  using jsondetail::as_int;
  using jsondetail::need;

  Instance ins;
  ins.g = graph_from_json(doc);

  if (const json* jr = jsondetail::maybe(doc, "region")) {
    Region region;
    const json& jk = need(*jr, "kind", "/region");
    std::string kind = jk.is_string() ? jk.get<std::string>() : "";
    require(kind == "squares" || kind == "triangles", ErrorKind::SchemaError,
            "/region/kind: expected \"squares\" or \"triangles\"");
    region.kind = kind == "squares" ? RegionKind::Squares : RegionKind::Triangles;
    const json& cells = as_array(need(*jr, "cells", "/region"), "/region/cells");
    for (size_t i = 0; i < cells.size(); ++i) {
      std::string path = "/region/cells/" + std::to_string(i);
      const json& c = as_array(cells[i], path);
      require(c.size() == 2, ErrorKind::SchemaError, path + ": expected [x, y]");
      region.cells.emplace_back(as_int(c[0], path + "/0"), as_int(c[1], path + "/1"));
    }
    RegionGraph rg = region_graph(region);
    require(jsondetail::same_graph(rg.g, ins.g), ErrorKind::SchemaError,
            "/region: cells do not generate the stored graph");
    ins.region = std::move(region);
  }

  if (const json* ji = jsondetail::maybe(doc, "identify")) {
    int w = as_int(need(*ji, "width", "/identify"), "/identify/width");
    int h = as_int(need(*ji, "height", "/identify"), "/identify/height");
    TorusGrid t = torus_grid(w, h);
    require(jsondetail::same_graph(t.ctx.primal, ins.g), ErrorKind::SchemaError,
            "/identify: wrap sizes do not generate the stored graph");
    ins.identify = {w, h};
  }

  if (const json* jm = jsondetail::maybe(doc, "manifest")) {
    require(jm->is_object(), ErrorKind::SchemaError, "/manifest: expected an object");
    if (const json* f = jsondetail::maybe(*jm, "family")) {
      require(f->is_string(), ErrorKind::SchemaError, "/manifest/family: expected a string");
      ins.family = f->get<std::string>();
    }
    if (const json* p = jsondetail::maybe(*jm, "params")) ins.params = *p;
    if (const json* v = jsondetail::maybe(*jm, "v_star")) {
      ins.v_star = as_int(*v, "/manifest/v_star");
      require(0 <= ins.v_star && ins.v_star < ins.g.nv(), ErrorKind::SchemaError,
              "/manifest/v_star: out of range");
    }
    if (const json* f = jsondetail::maybe(*jm, "f_star"))
      ins.f_star = as_int(*f, "/manifest/f_star");
    if (const json* r = jsondetail::maybe(*jm, "reference"))
      ins.reference = orientation_from_json(ins.g, *r, "/manifest/reference");
    if (const json* b = jsondetail::maybe(*jm, "bias")) {
      Bias bias(2 * ins.g.ne());
      for (int e = 0; e < ins.g.ne(); ++e) {
        std::string path = "/manifest/bias/" + std::to_string(e);
        auto it = b->find(std::to_string(e));
        require(it != b->end(), ErrorKind::SchemaError, path + ": missing key");
        require(it->is_string(), ErrorKind::SchemaError, path + ": expected a rational \"p/q\"");
        bias[dart_fwd(e)] = jsondetail::rat_from_string(it->get<std::string>(), path);
        bias[dart_rev(e)] = Rat(1) - bias[dart_fwd(e)];
      }
      ins.bias = std::move(bias);
    }
    if (const json* d = jsondetail::maybe(*jm, "degrees")) {
      const json& list = as_array(*d, "/manifest/degrees");
      require(static_cast<int>(list.size()) == ins.g.nv(), ErrorKind::SchemaError,
              "/manifest/degrees: one entry per vertex");
      DegreeSpec deg;
      for (size_t i = 0; i < list.size(); ++i)
        deg.push_back(as_int(list[i], "/manifest/degrees/" + std::to_string(i)));
      ins.degrees = std::move(deg);
    }
    if (const json* h = jsondetail::maybe(*jm, "hull")) {
      const json& list = as_array(*h, "/manifest/hull");
      for (size_t i = 0; i < list.size(); ++i)
        ins.hull.push_back(as_int(list[i], "/manifest/hull/" + std::to_string(i)));
    }
  }
  return ins;
}

inline Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  return instance_from_json(doc);
}

// ---------------------------------------------------------------------------
// Family construction. Tags follow the generator names; short aliases are
// resolved by the caller.

inline Instance cycle_instance(int n, int k) {
  CycleFamily f = cycle_family(n, k);
  Instance ins;
  ins.g = std::move(f.g);
  ins.family = "cycle";
  ins.params = {{"n", n}, {"k", k}};
  ins.v_star = f.v_star;
  ins.f_star = trace_faces(ins.g).face_of[dart_rev(0)];
  ins.reference = std::move(f.ref);
  ins.bias = std::move(f.bias);
  ins.hull.resize(n);
  for (int i = 0; i < n; ++i) ins.hull[i] = i;
  return ins;
}

inline Instance path_instance(int n) {
  PathFamily f = path_family(n);
  Instance ins;
  ins.g = std::move(f.g);
  ins.family = "path";
  ins.params = {{"n", n}};
  ins.v_star = f.v_star;
  ins.f_star = 0;  // a path has a single face
  ins.reference = std::move(f.ref);
  ins.bias = std::move(f.bias);
  return ins;
}

inline Instance grid_pinned_instance(int n) {
  GridPinnedFamily f = grid_pinned_family(n);
  Instance ins;
  ins.g = std::move(f.g);
  ins.family = "grid_pinned";
  ins.params = {{"n", n}};
  ins.v_star = f.v_star;
  ins.f_star = outer_face(trace_faces(ins.g));
  ins.reference = std::move(f.ref);
  ins.bias = std::move(f.bias);
  return ins;
}

inline Instance region_instance(const char* family, json params, Region region) {
  RegionGraph rg = region_graph(std::move(region));
  Instance ins;
  ins.g = rg.g;
  ins.family = family;
  ins.params = std::move(params);
  ins.f_star = outer_face(trace_faces(ins.g));
  ins.degrees = DegreeSpec(ins.g.nv(), 1);
  ins.region = std::move(rg.region);
  return ins;
}

inline Instance hexagon_instance(int a, int b, int c) {
  return region_instance("hexagon", {{"a", a}, {"b", b}, {"c", c}}, hexagon_region(a, b, c));
}

inline Instance aztec_instance(int n) {
  return region_instance("aztec", {{"n", n}}, aztec_region(n));
}

inline Instance torus_instance(int w, int h) {
  TorusGrid t = torus_grid(w, h);
  Instance ins;
  ins.g = t.ctx.primal;
  ins.family = "torus_grid";
  ins.params = {{"w", w}, {"h", h}};
  ins.degrees = DegreeSpec(ins.g.nv(), 1);
  ins.identify = {w, h};
  return ins;
}

inline Instance kn_instance(int n) {
  Instance ins;
  ins.g = kn_outer(n);
  ins.family = "kn_outer";
  ins.params = {{"n", n}};
  ins.v_star = 0;
  ins.hull.resize(n);
  for (int i = 0; i < n; ++i) ins.hull[i] = i;
  return ins;
}

inline Instance square_with_chord_instance() {
  Instance ins;
  ins.g = square_with_chord();
  ins.family = "square_with_chord";
  ins.v_star = 0;
  ins.f_star = outer_face(trace_faces(ins.g));
  ins.hull = {0, 1, 2, 3};
  return ins;
}

// ---------------------------------------------------------------------------
// Machine-readable errors.

inline json error_to_json(const Error& e) {
  std::string msg = e.what();
  std::string prefix = std::string(to_string(e.kind())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  return json{{"error", {{"kind", to_string(e.kind())}, {"message", msg}}}};
}

}  // namespace latgraph

#endif  // LATGRAPH_JSON_IO_HPP
