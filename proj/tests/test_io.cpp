#include <string>

#include "doctest.h"
#include "lgraph/error.hpp"
#include "lgraph/generators.hpp"
#include "lgraph/io.hpp"
#include "lgraph/render.hpp"

using namespace lgraph;

namespace {

int count(const std::string& text, const std::string& what) {
  int c = 0;
  for (auto p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) ++c;
  return c;
}

int count_lines(const std::string& text, char first) {
  int c = 0;
  bool bol = true;
  for (char ch : text) {
    if (bol && ch == first) ++c;
    bol = ch == '\n';
  }
  return c;
}

}  // namespace

TEST_CASE("graph documents") {
  auto tri = load_graph(Json::parse(R"({"n":3,"edges":[[0,1],[0,2],[1,2]]})")).graph;
  CHECK(tri.embedded());
  CHECK(tri.faces().size() == 2);

  Json k5 = {{"n", 5}, {"edges", Json::array()}};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5["edges"].push_back({i, j});
  CHECK_THROWS_AS(load_graph(k5), NotPlanar);
  CHECK_NOTHROW(load_abstract_graph(k5));

  // K4: edges 0:01 1:02 2:03 3:12 4:13 5:23
  Json k4 = Json::parse(R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],
    "rotation":[[0,1,2],[0,4,3],[1,3,5],[2,5,4]]})");
  auto g = load_graph(k4).graph;
  CHECK(g.faces().size() == 4);
  k4["rotation"][0] = {0, 0, 2};
  CHECK_THROWS_AS(load_graph(k4), InconsistentRotation);
  k4["rotation"][0] = {0, 1, 4};
  CHECK_THROWS_AS(load_graph(k4), InconsistentRotation);

  CHECK_THROWS_AS(load_graph(Json::parse(R"({"n":2,"edges":[[0,0]]})")), MalformedInput);
  CHECK_THROWS_AS(load_graph(Json::parse(R"({"n":2,"edges":[[0,1],[1,0]]})")), MalformedInput);
  CHECK_THROWS_AS(load_graph(Json::parse(R"({"n":2,"edges":[[0,2]]})")), MalformedInput);
  CHECK_THROWS_AS(load_graph(Json::parse(R"({"edges":[]})")), MalformedInput);
  auto b = load_graph(Json::parse(R"({"n":3,"edges":[[0,1],[0,2],[1,2]],"base_edge":[2,0]})"));
  CHECK(b.base_edge == std::pair<Vertex, Vertex>{2, 0});
}

TEST_CASE("serialization round trips") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto h = random_triangulation(12, seed);
    auto j = graph_to_json(h);
    auto back = load_graph(j).graph;
    CHECK(back.edges() == h.edges());
    for (Vertex v = 0; v < 12; ++v) CHECK(back.neighbors(v) == h.neighbors(v));
    CHECK(same_cycle(back.outer_face(), h.outer_face()));
    CHECK(graph_to_json(back) == j);

    auto r = compute_realizer(h, {0, 1, 11});
    auto r2 = realizer_from_json(realizer_to_json(r));
    CHECK(r2.color == r.color);
    CHECK(r2.tail == r.tail);
    CHECK(r2.outer == r.outer);
    CHECK(validate_realizer(r2).ok());
  }
  for (const char* q : {"0/1", "-7/3", "123456789012345678901234567891/7"})
    CHECK(to_string(parse_rational(q)) == q);

  LRepresentation rep{PlaneGraph(2, {{0, 1}}), 0, 1, {}};
  auto [s1, s2] = base_shapes();
  rep.shapes = {s1, s2};
  auto j = rep_to_json(rep);
  CHECK(j["shapes"][0]["top"] == Json::array({"1/1", "2/1"}));
  auto back = rep_from_json(j);
  CHECK(back.shapes == rep.shapes);
  CHECK(rep_to_json(back).dump() == j.dump());
  j["shapes"].erase(1);
  CHECK_THROWS_AS(rep_from_json(j), MalformedInput);
}

TEST_CASE("renderers") {
  auto [s1, s2] = base_shapes();
  LRepresentation rep{PlaneGraph(2, {{0, 1}}), 0, 1, {s1, s2}};
  auto svg = render_svg(rep);
  CHECK(count(svg, "<polyline") == 2);
  auto with = render_svg(rep, {true});
  CHECK(count(with, "<polyline") == 3);
  CHECK(render_svg(rep) == svg);

  TriangleRepresentation tr{PlaneGraph(3, {{0, 1}, {0, 2}, {1, 2}}), {}};
  tr.triangles = {{{0, 0}, {0, 2}, {2, 0}}, {{2, -1}, {2, 0}, {3, -1}}, {{0, -1}, {0, 0}, {1, -1}}};
  CHECK(count(render_svg(tr), "<polygon") == 3);

  CuboidRepresentation cr;
  cr.host = PlaneGraph(3, {{0, 1}, {0, 2}, {1, 2}});
  cr.boxes = {{{1, 4}, {-1, 2}, {-4, -1}}, {{3, 5}, {-3, -1}, {-4, -2}}, {{1, 3}, {-3, -1}, {-4, -3}}};
  auto obj = export_obj(cr);
  CHECK(count_lines(obj, 'v') == 24);
  CHECK(count_lines(obj, 'f') == 18);
  CHECK(count_lines(obj, 'g') == 3);
  CHECK(count_lines(export_obj(CuboidRepresentation{}), 'v') == 0);
}
