#include "lgraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

Vertex get_vertex(const Json& j, int n, const char* what) {
  int v = get_int(j, what);
  if (v < 0 || v >= n) throw MalformedInput(std::string(what) + " out of range: " + std::to_string(v));
  return v;
}

Rational get_rational(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
  throw MalformedInput("rational must be a \"p/q\" string");
}

Point get_point(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput("point must be a pair");
  return {get_rational(j[0]), get_rational(j[1])};
}

Json point_json(const Point& p) { return rational_pair(p.x, p.y); }

GraphDocument load(const Json& doc, bool embed_missing) {
  if (!doc.is_object()) throw MalformedInput("graph document must be an object");
  if (!doc.contains("n") || !doc.contains("edges")) throw MalformedInput("graph needs \"n\" and \"edges\"");
  const int n = get_int(doc["n"], "n");
  if (n < 0) throw MalformedInput("negative vertex count");
  if (!doc["edges"].is_array()) throw MalformedInput("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw MalformedInput("edge must be a pair");
    edges.push_back({get_vertex(e[0], n, "edge endpoint"), get_vertex(e[1], n, "edge endpoint")});
  }
  GraphDocument out{PlaneGraph(n, edges), std::nullopt};
  auto& g = out.graph;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || static_cast<int>(doc["labels"].size()) != n)
      throw MalformedInput("labels must name every vertex");
    for (const auto& l : doc["labels"]) g.labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  }
  std::vector<Vertex> outer;
  if (doc.contains("outer_face")) {
    if (!doc["outer_face"].is_array()) throw MalformedInput("outer_face must be an array");
    for (const auto& v : doc["outer_face"]) outer.push_back(get_vertex(v, n, "outer_face vertex"));
  }
  if (doc.contains("rotation")) {
    const auto& rot = doc["rotation"];
    if (!rot.is_array() || static_cast<int>(rot.size()) != n) throw MalformedInput("rotation must list every vertex");
    std::vector<std::vector<Vertex>> lists(n);
    for (Vertex v = 0; v < n; ++v) {
      if (!rot[v].is_array()) throw MalformedInput("rotation entry must be an array");
      for (const auto& ej : rot[v]) {
        int e = get_int(ej, "rotation edge index");
        if (e < 0 || e >= g.num_edges()) throw MalformedInput("rotation edge index out of range");
        const auto& ed = g.edges()[e];
        if (ed.u != v && ed.v != v)
          throw InconsistentRotation("edge " + std::to_string(e) + " is not incident to " + std::to_string(v));
        lists[v].push_back(ed.u == v ? ed.v : ed.u);
      }
    }
    g.set_embedding(std::move(lists), outer);
  } else if (embed_missing) {
    embed(g, outer);
  }
  if (doc.contains("base_edge")) {
    const auto& b = doc["base_edge"];
    if (!b.is_array() || b.size() != 2) throw MalformedInput("base_edge must be a pair");
    Vertex u = get_vertex(b[0], n, "base_edge vertex"), v = get_vertex(b[1], n, "base_edge vertex");
    if (!g.adjacent(u, v)) throw MalformedInput("base_edge is not an edge");
    out.base_edge = {u, v};
  }
  return out;
}

Color color_from(const std::string& s) {
  if (s == "red") return Color::Red;
  if (s == "blue") return Color::Blue;
  if (s == "green") return Color::Green;
  throw MalformedInput("unknown colour " + s);
}

Json colored_edges(const PlaneGraph& g, const std::vector<Color>& color, const std::vector<Vertex>& tail) {
  Json edges = Json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    if (color[e] == Color::None) continue;
    const auto& ed = g.edges()[e];
    edges.push_back({{"u", ed.u}, {"v", ed.v}, {"color", color_name(color[e])}, {"dir", tail[e] == ed.u ? "uv" : "vu"}});
  }
  return edges;
}

}  // namespace

GraphDocument load_graph(const Json& doc) { return load(doc, true); }
GraphDocument load_abstract_graph(const Json& doc) { return load(doc, false); }

Json graph_to_json(const PlaneGraph& g, std::optional<std::pair<Vertex, Vertex>> base_edge) {
  Json j;
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  if (g.embedded()) {
    Json rot = Json::array();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      Json lst = Json::array();
      for (Vertex w : g.neighbors(v)) lst.push_back(g.edge_index(v, w));
      rot.push_back(lst);
    }
    j["rotation"] = rot;
    j["outer_face"] = g.outer_face();
  }
  if (!g.labels.empty()) j["labels"] = g.labels;
  if (base_edge) j["base_edge"] = {base_edge->first, base_edge->second};
  return j;
}

Json rational_pair(const Rational& a, const Rational& b) { return Json::array({to_string(a), to_string(b)}); }

Json realizer_to_json(const SchnyderRealizer& r) {
  return {{"graph", graph_to_json(r.host)},
          {"outer", {r.outer[0], r.outer[1], r.outer[2]}},
          {"edges", colored_edges(r.host, r.color, r.tail)}};
}

SchnyderRealizer realizer_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("outer") || !doc.contains("edges"))
    throw MalformedInput("realizer needs \"graph\", \"outer\" and \"edges\"");
  SchnyderRealizer r;
  r.host = load_graph(doc["graph"]).graph;
  const int n = r.host.num_vertices();
  if (!doc["outer"].is_array() || doc["outer"].size() != 3) throw MalformedInput("outer must list three vertices");
  for (int i = 0; i < 3; ++i) r.outer[i] = get_vertex(doc["outer"][i], n, "outer vertex");
  r.color.assign(r.host.num_edges(), Color::None);
  r.tail.assign(r.host.num_edges(), -1);
  for (const auto& e : doc["edges"]) {
    Vertex u = get_vertex(e.at("u"), n, "edge endpoint"), v = get_vertex(e.at("v"), n, "edge endpoint");
    int idx = r.host.edge_index(u, v);
    if (idx < 0) throw MalformedInput("coloured edge is not in the graph");
    r.color[idx] = color_from(e.at("color").get<std::string>());
    std::string dir = e.at("dir").get<std::string>();
    if (dir != "uv" && dir != "vu") throw MalformedInput("dir must be uv or vu");
    r.tail[idx] = dir == "uv" ? u : v;
  }
  return r;
}

Json labeling_to_json(const EdgeLabeling& el) {
  return {{"graph", graph_to_json(el.host)}, {"v1", el.v1}, {"v2", el.v2},
          {"edges", colored_edges(el.host, el.color, el.tail)}};
}

Json rep_to_json(const LRepresentation& rep) {
  Json shapes = Json::array();
  for (Vertex v = 0; v < static_cast<int>(rep.shapes.size()); ++v)
    shapes.push_back({{"v", v}, {"top", point_json(rep.shapes[v].top)}, {"right", point_json(rep.shapes[v].right)}});
  return {{"graph", graph_to_json(rep.host)}, {"v1", rep.v1}, {"v2", rep.v2}, {"shapes", shapes}};
}

LRepresentation rep_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("shapes"))
    throw MalformedInput("representation needs \"graph\" and \"shapes\"");
  LRepresentation rep;
  rep.host = load_abstract_graph(doc["graph"]).graph;
  const int n = rep.host.num_vertices();
  rep.v1 = get_vertex(doc.value("v1", Json(0)), n, "v1");
  rep.v2 = get_vertex(doc.value("v2", Json(1)), n, "v2");
  rep.shapes.resize(n);
  std::vector<char> seen(n, 0);
  for (const auto& s : doc["shapes"]) {
    Vertex v = get_vertex(s.at("v"), n, "shape vertex");
    if (seen[v]++) throw MalformedInput("two shapes for vertex " + std::to_string(v));
    rep.shapes[v] = {get_point(s.at("top")), get_point(s.at("right"))};
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw MalformedInput("no shape for vertex " + std::to_string(v));
  return rep;
}

Json cuboids_to_json(const CuboidRepresentation& cr) {
  Json boxes = Json::array();
  for (Vertex v = 0; v < static_cast<int>(cr.boxes.size()); ++v) {
    const auto& b = cr.boxes[v];
    boxes.push_back({{"v", v}, {"x", rational_pair(b.x[0], b.x[1])}, {"y", rational_pair(b.y[0], b.y[1])},
                     {"z", rational_pair(b.z[0], b.z[1])}});
  }
  return {{"graph", graph_to_json(cr.host)}, {"proper", cr.proper}, {"boxes", boxes}};
}

CuboidRepresentation cuboids_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("boxes"))
    throw MalformedInput("cuboids need \"graph\" and \"boxes\"");
  CuboidRepresentation cr;
  cr.host = load_abstract_graph(doc["graph"]).graph;
  const int n = cr.host.num_vertices();
  cr.boxes.resize(n);
  std::vector<char> seen(n, 0);
  for (const auto& b : doc["boxes"]) {
    Vertex v = get_vertex(b.at("v"), n, "box vertex");
    if (seen[v]++) throw MalformedInput("two boxes for vertex " + std::to_string(v));
    auto x = get_point(b.at("x")), y = get_point(b.at("y")), z = get_point(b.at("z"));
    cr.boxes[v] = {{x.x, x.y}, {y.x, y.y}, {z.x, z.y}};
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw MalformedInput("no box for vertex " + std::to_string(v));
  cr.proper = doc.value("proper", false);
  return cr;
}

TriangleRepresentation triangles_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("triangles"))
    throw MalformedInput("triangles need \"graph\" and \"triangles\"");
  TriangleRepresentation tr;
  tr.host = load_abstract_graph(doc["graph"]).graph;
  const int n = tr.host.num_vertices();
  tr.triangles.resize(n);
  std::vector<char> seen(n, 0);
  for (const auto& t : doc["triangles"]) {
    Vertex v = get_vertex(t.at("v"), n, "triangle vertex");
    if (seen[v]++) throw MalformedInput("two triangles for vertex " + std::to_string(v));
    tr.triangles[v] = {get_point(t.at("bend")), get_point(t.at("top")), get_point(t.at("right"))};
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw MalformedInput("no triangle for vertex " + std::to_string(v));
  return tr;
}

Json triangles_to_json(const TriangleRepresentation& tr) {
  Json tris = Json::array();
  for (Vertex v = 0; v < static_cast<int>(tr.triangles.size()); ++v) {
    const auto& t = tr.triangles[v];
    tris.push_back({{"v", v}, {"bend", point_json(t.bend)}, {"top", point_json(t.top)},
                    {"right", point_json(t.right)}});
  }
  return {{"graph", graph_to_json(tr.host)}, {"triangles", tris}};
}

Json trace_to_json(const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  char hex[17];
  for (const auto& t : trace) {
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(t.realizer_hash));
    out.push_back({{"realizer_hash", hex}, {"signs", t.signs}, {"min_entry", to_string(t.min_entry)}});
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("JSON: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("cannot write " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot move " + tmp + " to " + path);
}

}  // namespace lgraph
