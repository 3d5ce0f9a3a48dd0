#include <algorithm>
#include <set>

#include "doctest.h"
#include "lgraph/degeneracy.hpp"
#include "lgraph/error.hpp"
#include "lgraph/generators.hpp"
#include "lgraph/plane_graph.hpp"

using namespace lgraph;

namespace {

PlaneGraph k4() { return PlaneGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Euler characteristic straight from the face list.
int euler(const PlaneGraph& g) {
  return g.num_vertices() - g.num_edges() + static_cast<int>(g.faces().size());
}

}  // namespace

TEST_CASE("constructor rejects loops and parallel edges") {
  CHECK_THROWS_AS(PlaneGraph(2, {{0, 0}}), MalformedInput);
  CHECK_THROWS_AS(PlaneGraph(2, {{0, 1}, {1, 0}}), MalformedInput);
  CHECK_THROWS_AS(PlaneGraph(2, {{0, 2}}), MalformedInput);
}

TEST_CASE("embedding of K4 and K5") {
  auto g = k4();
  embed(g);
  CHECK(euler(g) == 2);
  for (const auto& f : g.faces()) CHECK(f.size() == 3);

  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) es.push_back({i, j});
  PlaneGraph k5(5, es);
  CHECK_FALSE(is_planar(k5));
  CHECK_THROWS_AS(embed(k5), NotPlanar);
}

TEST_CASE("set_embedding rejects a non-planar rotation") {
  auto g = k4();
  // rotation of K4 with one vertex mirrored: genus 1
  CHECK_THROWS_AS(g.set_embedding({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 1, 2}}), InconsistentRotation);
}

TEST_CASE("random triangulations are maximal plane graphs") {
  for (int n : {3, 4, 10, 50}) {
    auto g = random_triangulation(n, 7);
    CHECK(g.num_edges() == 3 * n - 6);
    CHECK(euler(g) == 2);
    for (const auto& f : g.faces()) CHECK(f.size() == 3);
    CHECK(same_cycle(g.outer_face(), {0, 1, n - 1}));
  }
  auto t = random_planar_3tree(30, 3);
  CHECK(t.num_edges() == 84);
  CHECK(euler(t) == 2);
  CHECK(same_cycle(t.outer_face(), {0, 1, 2}));
}

TEST_CASE("degeneracy order against recount") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = random_stacking(25, s);
    auto d = degeneracy_order(g, 2);
    REQUIRE(d);
    CHECK(d->maximal);
    CHECK(check_degeneracy_order(g, *d));
  }
  auto tri = random_triangulation(12, 1);
  CHECK_FALSE(degeneracy_order(tri, 2));
  auto d5 = degeneracy_order(tri, 5);
  REQUIRE(d5);
  CHECK(check_degeneracy_order(tri, *d5));
  // a 4-cycle is 2-degenerate but not maximal
  auto c4 = degeneracy_order(PlaneGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2);
  REQUIRE(c4);
  CHECK_FALSE(c4->maximal);
}

TEST_CASE("biconnectivity and components") {
  PlaneGraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK_FALSE(is_biconnected(bowtie, std::vector<char>(5, 1)));
  CHECK(is_biconnected(bowtie, {1, 1, 1, 0, 0}));
  auto comp = components_without(bowtie, {2});
  CHECK(comp[2] == -1);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[3] == comp[4]);
  CHECK(comp[0] != comp[3]);
}

TEST_CASE("planar stacking census") {
  auto all = all_planar_stackings(7);
  std::set<std::vector<std::uint8_t>> forms;
  for (const auto& g : all) {
    CHECK(is_planar(g));
    auto d = degeneracy_order(g, 2);
    REQUIRE(d);
    CHECK(d->maximal);
    forms.insert(canonical_form(g));
  }
  CHECK(forms.size() == all.size());
  // relabelling never changes the canonical form
  for (const auto& g : all) {
    std::vector<Vertex> perm(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) perm[i] = g.num_vertices() - 1 - i;
    CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));
  }
}
