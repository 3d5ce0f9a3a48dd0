#include <algorithm>

#include "doctest.h"
#include "lgraph/error.hpp"
#include "lgraph/generators.hpp"
#include "lgraph/io.hpp"
#include "lgraph/recognition.hpp"

using namespace lgraph;

namespace {

PlaneGraph diamond() { return PlaneGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
PlaneGraph k4() { return PlaneGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("precedence orientation") {
  auto po = precedence_orientation(diamond(), 0, 1);
  REQUIRE(po);
  CHECK(po->pred[2] == std::vector<Vertex>{0, 1});
  CHECK(po->pred[3] == std::vector<Vertex>{0, 1});
  CHECK(check_degeneracy_order(diamond(), *po->order_found));

  po = precedence_orientation(diamond(), 0, 2);
  REQUIRE(po);
  CHECK(po->pred[1] == std::vector<Vertex>{0, 2});
  CHECK(po->pred[3] == std::vector<Vertex>{0, 1});

  for (const auto& e : k4().edges()) CHECK_FALSE(precedence_orientation(k4(), e.u, e.v));
  CHECK_FALSE(precedence_orientation(diamond(), 2, 3));  // not an edge
}

TEST_CASE("oracle on small graphs") {
  auto tri = PlaneGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto t = oracle_two_canonical(tri, 0, 1);
  REQUIRE(t.size() == 1);
  CHECK(t[0].order == std::vector<Vertex>{0, 1, 2});

  auto d = oracle_two_canonical(diamond(), 0, 1);
  REQUIRE(d.size() == 2);
  CHECK(d[0].order == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(d[1].order == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(oracle_two_canonical(diamond(), 0, 1, 1).size() == 1);

  for (const auto& e : k4().edges()) {
    CHECK(oracle_two_canonical(k4(), e.u, e.v).empty());
    CHECK_FALSE(oracle_has_two_canonical(k4(), e.v, e.u));
  }
  CHECK_THROWS_AS(oracle_two_canonical(random_stacking(13, 1), 0, 1), TooLarge);
}

TEST_CASE("test_base_edge and recognize on small cases") {
  auto r = test_base_edge(diamond(), 0, 1);
  REQUIRE(r.ok());
  CHECK(r.order->order == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(validate_lrep(*r.rep).ok());

  auto tri = PlaneGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto t = test_base_edge(tri, 0, 1);
  REQUIRE(t.ok());
  CHECK(t.order->order == std::vector<Vertex>{0, 1, 2});

  auto bad = test_base_edge(k4(), 0, 1);
  CHECK_FALSE(bad.ok());
  CHECK(bad.refusal.step == "precedence");

  auto rk = recognize(k4());
  CHECK_FALSE(rk.lgraph);
  CHECK(rk.reason == "not maximal 2-degenerate");
  auto rd = recognize(diamond());
  CHECK(rd.lgraph);
  CHECK(rd.v1 == 0);
  CHECK(rd.v2 == 1);
}

TEST_CASE("recognition agrees with the oracle") {
  auto check_graph = [](const PlaneGraph& g) {
    bool any = false;
    for (const auto& e : g.edges())
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        bool expect = oracle_has_two_canonical(g, a, b);
        auto r = test_base_edge(g, a, b);
        CHECK_MESSAGE(r.ok() == expect, "base " << a << "-" << b << " refusal " << r.refusal.step << ": "
                                                << r.refusal.detail);
        if (r.ok()) CHECK(validate_lrep(*r.rep).ok());
        any = any || expect;
      }
    auto rec = recognize(g);
    CHECK(rec.lgraph == any);
    auto ser = recognize_serial(g);
    CHECK(ser.lgraph == rec.lgraph);
    CHECK(ser.v1 == rec.v1);
    CHECK(ser.v2 == rec.v2);
    return any;
  };
  int negatives = 0;
  for (const auto& g : all_planar_stackings(7)) negatives += !check_graph(g);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = random_stacking(9, seed);
    if (is_planar(g)) negatives += !check_graph(g);
  }
  MESSAGE("negative instances: " << negatives);
}

TEST_CASE("recognition is invariant under relabeling") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_stacking(8, seed);
    if (!is_planar(g)) continue;
    std::vector<Vertex> perm(8);
    for (int i = 0; i < 8; ++i) perm[i] = (i * 3 + 5) % 8;
    auto h = relabel(g, perm);
    CHECK(recognize(g).lgraph == recognize(h).lgraph);
    for (const auto& e : g.edges())
      CHECK(test_base_edge(g, e.u, e.v).ok() == test_base_edge(h, perm[e.u], perm[e.v]).ok());
  }
}

TEST_CASE("archived negative instance") {
  // smallest size with planar maximal 2-degenerate graphs that have no
  // 2-canonical order: none below 7 vertices, four classes on 7
  auto g = load_abstract_graph(read_json_file(LGRAPH_TEST_DATA "/negative.json")).graph;
  CHECK(is_planar(g));
  auto d = degeneracy_order(g, 2);
  REQUIRE(d);
  CHECK(d->maximal);
  for (const auto& e : g.edges()) {
    CHECK_FALSE(oracle_has_two_canonical(g, e.u, e.v));
    CHECK_FALSE(oracle_has_two_canonical(g, e.v, e.u));
  }
  auto r = recognize(g);
  CHECK_FALSE(r.lgraph);
  CHECK(r.reason == "no base edge admits a 2-canonical order");

  int negatives = 0;
  for (const auto& h : all_planar_stackings(7)) {
    bool any = false;
    for (const auto& e : h.edges())
      any = any || oracle_has_two_canonical(h, e.u, e.v) || oracle_has_two_canonical(h, e.v, e.u);
    if (!any) {
      CHECK(h.num_vertices() == 7);
      ++negatives;
    }
  }
  CHECK(negatives == 4);
}
