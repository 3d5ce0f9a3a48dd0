#include <algorithm>

#include "doctest.h"
#include "lgraph/error.hpp"
#include "lgraph/generators.hpp"
#include "lgraph/schnyder.hpp"

using namespace lgraph;

namespace {

// Independent recount: every inner vertex has out-degree one per colour and
// the outer vertices have none.
bool out_degrees_ok(const SchnyderRealizer& r) {
  std::vector<std::array<int, 4>> out(r.n(), {0, 0, 0, 0});
  for (int i = 0; i < r.host.num_edges(); ++i)
    if (r.tail[i] >= 0) ++out[r.tail[i]][static_cast<int>(r.color[i])];
  for (Vertex v = 0; v < r.n(); ++v) {
    int want = r.is_outer(v) ? 0 : 1;
    for (int c = 1; c <= 3; ++c)
      if (out[v][c] != want) return false;
  }
  return true;
}

PlaneGraph k4() {
  auto g = random_triangulation(4, 0);
  return g;
}

}  // namespace

TEST_CASE("K4 has the forced realizer") {
  auto h = k4();
  auto r = compute_realizer(h, {0, 1, 3});
  CHECK(validate_realizer(r).ok());
  CHECK(r.color[h.edge_index(2, 0)] == Color::Red);
  CHECK(r.color[h.edge_index(2, 1)] == Color::Blue);
  CHECK(r.color[h.edge_index(2, 3)] == Color::Green);
  CHECK(r.tail[h.edge_index(2, 3)] == 2);
}

TEST_CASE("realizers of random triangulations") {
  for (int n : {3, 5, 12, 50, 120}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto h = random_triangulation(n, seed);
      auto r = compute_realizer(h, {0, 1, n - 1});
      CHECK(validate_realizer(r).ok());
      CHECK(out_degrees_ok(r));
      auto co = canonical_order_from_realizer(r);
      CHECK(validate_canonical_order(h, co).ok());
      CHECK(is_topological_for(r, co));
      // the order gives back the same colouring
      auto r2 = realizer_from_canonical_order(h, co);
      CHECK(r2.color == r.color);
      CHECK(r2.tail == r.tail);
      // orientation alone determines the colours
      auto r3 = realizer_from_orientation(h, r.outer, r.tail);
      CHECK(r3.color == r.color);
    }
  }
}

TEST_CASE("3-trees") {
  auto h = random_planar_3tree(40, 9);
  auto r = compute_realizer(h, {0, 1, 2});
  CHECK(validate_realizer(r).ok());
  CHECK(out_degrees_ok(r));
}

TEST_CASE("validate_realizer catches a broken colouring") {
  auto h = random_triangulation(15, 2);
  auto r = compute_realizer(h, {0, 1, 14});
  for (int i = 0; i < h.num_edges(); ++i)
    if (r.color[i] == Color::Red) {
      r.color[i] = Color::Blue;
      break;
    }
  CHECK_FALSE(validate_realizer(r).ok());
}

TEST_CASE("validate_canonical_order rejects bad orders") {
  auto h = random_triangulation(10, 4);
  auto co = shelling_order(h, {0, 1, 9});
  CHECK(validate_canonical_order(h, co).ok());
  auto bad = co;
  std::swap(bad.order[2], bad.order[8]);
  CHECK_FALSE(validate_canonical_order(h, bad).ok());
  CHECK_THROWS_AS(realizer_from_canonical_order(h, bad), InvalidOrder);
}

TEST_CASE("green deletion keeps 2n-5 edges") {
  for (int n : {4, 9, 60}) {
    auto h = random_triangulation(n, 11);
    auto r = compute_realizer(h, {0, 1, n - 1});
    auto d = delete_green(r);
    CHECK(d.graph.num_vertices() == n - 1);
    CHECK(d.graph.num_edges() == 2 * n - 5);
    CHECK(d.to_host[d.v1] == 0);
    CHECK(d.to_host[d.v2] == 1);
    CHECK(d.from_host[n - 1] == -1);
    CHECK(d.graph.embedded());
  }
}

TEST_CASE("K4 and triangle edge cases") {
  auto h = k4();
  auto r = compute_realizer(h, {0, 1, 3});
  CHECK(canonical_order_from_realizer(r).order == std::vector<Vertex>{0, 1, 2, 3});

  auto swapped = r;
  std::swap(swapped.color[h.edge_index(2, 0)], swapped.color[h.edge_index(2, 1)]);
  auto rep = validate_realizer(swapped);
  CHECK_FALSE(rep.ok());

  auto tri = random_triangulation(3, 0);
  auto rt = compute_realizer(tri, {0, 1, 2});
  CHECK(validate_realizer(rt).ok());
  CHECK(std::all_of(rt.color.begin(), rt.color.end(), [](Color c) { return c == Color::None; }));
  CHECK(canonical_order_from_realizer(rt).order == std::vector<Vertex>{0, 1, 2});
  CHECK(delete_green(rt).graph.num_edges() == 1);
}

TEST_CASE("reversing one green edge breaks the realizer") {
  auto h = random_triangulation(30, 8);
  auto r = compute_realizer(h, {0, 1, 29});
  for (int i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edges()[i];
    if (r.color[i] != Color::Green || r.is_outer(e.u) || r.is_outer(e.v)) continue;
    auto bad = r;
    bad.tail[i] = bad.tail[i] == e.u ? e.v : e.u;
    CHECK_FALSE(validate_realizer(bad).ok());
  }
}

TEST_CASE("red reversed with blue and green stays acyclic") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto h = random_triangulation(40, seed);
    auto r = compute_realizer(h, {0, 1, 39});
    // Kahn on S1^-1 u S2 u Sn
    const int n = r.n();
    std::vector<std::vector<Vertex>> out(n);
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < h.num_edges(); ++i) {
      if (r.color[i] == Color::None) continue;
      const auto& e = h.edges()[i];
      Vertex t = r.tail[i], hd = t == e.u ? e.v : e.u;
      if (r.color[i] == Color::Red) std::swap(t, hd);
      out[t].push_back(hd);
      ++indeg[hd];
    }
    std::vector<Vertex> q;
    for (Vertex v = 0; v < n; ++v)
      if (!indeg[v]) q.push_back(v);
    for (std::size_t s = 0; s < q.size(); ++s)
      for (Vertex w : out[q[s]])
        if (!--indeg[w]) q.push_back(w);
    CHECK(q.size() == static_cast<std::size_t>(n));
  }
}
