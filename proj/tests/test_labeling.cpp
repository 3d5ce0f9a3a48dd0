#include <algorithm>

#include "doctest.h"
#include "lgraph/error.hpp"
#include "lgraph/generators.hpp"
#include "lgraph/labeling.hpp"

using namespace lgraph;

namespace {

bool mentions(const Report& r, const std::string& what) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const std::string& f) { return f.find(what) != std::string::npos; });
}

PlaneGraph diamond() { return PlaneGraph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

}  // namespace

TEST_CASE("K4 restricts to a labeled triangle") {
  auto h = random_triangulation(4, 0);
  auto r = compute_realizer(h, {0, 1, 3});
  auto d = delete_green(r);
  auto el = labeling_from_realizer(r, d);
  CHECK(el.host.num_edges() == 3);
  Vertex u = d.from_host[2];
  CHECK(el.color[el.host.edge_index(u, el.v1)] == Color::Red);
  CHECK(el.color[el.host.edge_index(u, el.v2)] == Color::Blue);
  CHECK(el.tail[el.host.edge_index(u, el.v1)] == u);
  CHECK(validate_labeling(el).ok());
  auto o = two_canonical_from_labeling(el);
  CHECK(o.order == std::vector<Vertex>{el.v1, el.v2, u});
}

TEST_CASE("labelings of random triangulations peel completely") {
  for (int n : {5, 12, 50, 150})
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto h = random_triangulation(n, seed);
      auto r = compute_realizer(h, {0, 1, n - 1});
      auto el = labeling_from_realizer(r);
      REQUIRE(validate_labeling(el).ok());
      auto o = two_canonical_from_labeling(el);
      CHECK(o.order.size() == static_cast<std::size_t>(n - 1));
      CHECK(validate_two_canonical(el.host, o).ok());
      // the vertices next to v1 and v2 on the outer path point at them
      auto face = el.host.face_from_dart(el.v1, el.v2);
      Vertex near_v2 = face[2], near_v1 = face.back();
      if (near_v1 != el.v2) {
        CHECK(el.tail[el.host.edge_index(near_v1, el.v1)] == near_v1);
        CHECK(el.tail[el.host.edge_index(near_v2, el.v2)] == near_v2);
      }
    }
}

TEST_CASE("validate_labeling finds local and global violations") {
  auto h = random_triangulation(20, 5);
  auto r = compute_realizer(h, {0, 1, 19});
  auto el = labeling_from_realizer(r);
  // turn some blue out-edge red: that vertex now has two outgoing reds
  auto bad = el;
  for (int i = 0; i < bad.host.num_edges(); ++i)
    if (bad.color[i] == Color::Blue && bad.tail[i] != el.v1) {
      const auto& e = bad.host.edges()[i];
      Vertex head = bad.tail[i] == e.u ? e.v : e.u;
      if (head == el.v2) continue;
      bad.color[i] = Color::Red;
      CHECK(mentions(validate_labeling(bad), "exactly one outgoing red"));
      break;
    }

  // 4-cycle 2 -b-> 3 <-r- 4 -b-> 5 <-r- ... closes once red is reversed
  PlaneGraph c(6, {{0, 1}, {2, 3}, {4, 3}, {4, 5}, {2, 5}, {2, 0}, {4, 1}});
  embed(c);
  EdgeLabeling cyc{c, 0, 1, {}, {}};
  cyc.color = {Color::None, Color::Blue, Color::Red, Color::Blue, Color::Red, Color::Red, Color::Blue};
  cyc.tail = {-1, 2, 4, 4, 2, 2, 4};
  CHECK(mentions(validate_labeling(cyc), "directed cycle"));
}

TEST_CASE("2-canonical validation") {
  auto g = diamond();
  CHECK(validate_two_canonical(g, {{0, 1, 2, 3}}).ok());
  CHECK(validate_two_canonical(g, {{0, 1, 3, 2}}).ok());
  auto k4 = random_triangulation(4, 0);
  CHECK(mentions(validate_two_canonical(k4, {{0, 1, 2, 3}}), "3 earlier neighbours"));
  // 3 covers 2, so 4 cannot attach to 2
  PlaneGraph p(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {2, 4}});
  auto rep = validate_two_canonical(p, {{0, 1, 2, 3, 4}});
  CHECK(mentions(rep, "earlier neighbour 2 of 4 is not on the boundary"));
  auto att = attachments(g, {{0, 1, 2, 3}});
  CHECK(att.first[3] == 0);
  CHECK(att.second[3] == 1);
}
