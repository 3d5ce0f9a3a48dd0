#include "doctest.h"
#include "lgraph/error.hpp"
#include "lgraph/generators.hpp"
#include "lgraph/lift3d.hpp"

using namespace lgraph;

namespace {

// Dimension of the intersection of two closed boxes, -1 if empty.
int meet_dimension(const Box& a, const Box& b) {
  int dim = 0;
  const std::array<Rational, 2>* pa[] = {&a.x, &a.y, &a.z};
  const std::array<Rational, 2>* pb[] = {&b.x, &b.y, &b.z};
  for (int k = 0; k < 3; ++k) {
    Rational lo = (*pa[k])[0] > (*pb[k])[0] ? (*pa[k])[0] : (*pb[k])[0];
    Rational hi = (*pa[k])[1] < (*pb[k])[1] ? (*pa[k])[1] : (*pb[k])[1];
    if (hi < lo) return -1;
    if (lo < hi) ++dim;
  }
  return dim;
}

struct Pipeline {
  SchnyderRealizer r;
  LRepresentation rep;
};

Pipeline pipeline(int n, std::uint64_t seed, bool equilateral) {
  auto h = random_triangulation(n, seed);
  auto r = compute_realizer(h, {0, 1, n - 1});
  auto el = labeling_from_realizer(r);
  auto rep = build_lrep(el.host, two_canonical_from_labeling(el));
  if (equilateral) rep = equilateralize(rep);
  return {r, rep};
}

}  // namespace

TEST_CASE("canonical heights") {
  auto hk = heights_from_canonical({{0, 1, 2, 3}});
  CHECK(hk.h == std::vector<Rational>{-1, -2, -3, -4, -5});
  auto ht = heights_from_canonical({{0, 1, 2}});
  CHECK(ht.h == std::vector<Rational>{-1, -2, -3, -4});
}

TEST_CASE("triangle lift on the base shapes") {
  auto p = pipeline(3, 0, false);
  auto h = heights_from_canonical(canonical_order_from_realizer(p.r));
  auto cr = lift_cuboids(p.rep, p.r, h);
  CHECK(cr.boxes[0] == Box{{1, 4}, {-1, 2}, {-4, -1}});
  CHECK(cr.boxes[1] == Box{{3, 5}, {-3, -1}, {-4, -2}});
  CHECK(cr.boxes[2] == Box{{1, 3}, {-3, -1}, {-4, -3}});
  CHECK(cr.shapes[2] == LShape{{1, -1}, {3, -3}});
  CHECK(cr.shapes[2].equilateral());
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(meet_dimension(cr.boxes[i], cr.boxes[j]) == 2);
  auto check = validate_cuboids(cr);
  CHECK(check.report.ok());
  CHECK(check.proper);
}

TEST_CASE("K4 lift") {
  auto p = pipeline(4, 0, false);
  auto h = heights_from_canonical(canonical_order_from_realizer(p.r));
  auto cr = lift_cuboids(p.rep, p.r, h);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(meet_dimension(cr.boxes[i], cr.boxes[j]) >= 0);
  CHECK(validate_cuboids(cr).report.ok());
}

TEST_CASE("validate_cuboids flags overlaps and stray touches") {
  auto p = pipeline(10, 1, false);
  auto h = heights_from_canonical(canonical_order_from_realizer(p.r));
  auto cr = lift_cuboids(p.rep, p.r, h);
  REQUIRE(validate_cuboids(cr).report.ok());
  auto bad = cr;
  bad.boxes[3].z[0] -= 1;  // reaches down into its green parent
  auto rep = validate_cuboids(bad).report;
  CHECK_FALSE(rep.ok());
  CHECK(rep.summary().find("share interior points") != std::string::npos);

  CHECK(classify(Box{{0, 1}, {0, 1}, {0, 1}}, Box{{1, 2}, {1, 2}, {0, 1}}) == BoxMeet::Lower);
  CHECK(classify(Box{{0, 1}, {0, 1}, {0, 1}}, Box{{1, 2}, {0, 1}, {0, 1}}) == BoxMeet::Face);
  CHECK(classify(Box{{0, 1}, {0, 1}, {0, 1}}, Box{{2, 3}, {0, 1}, {0, 1}}) == BoxMeet::Disjoint);
}

TEST_CASE("square-based cuboids from equilateral representations") {
  for (int n : {5, 20, 50}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto p = pipeline(n, seed, true);
      auto co = canonical_order_from_realizer(p.r);
      auto h = heights_from_canonical(co);
      CHECK(check_heights(p.r, h).ok());
      auto cr = lift_cuboids(p.rep, p.r, h);
      auto check = validate_cuboids(cr);
      CHECK(check.report.ok());
      CHECK(check.proper);
      CHECK(validate_cuboids_serial(cr).report.summary() == check.report.summary());
      for (const auto& b : cr.boxes) CHECK(b.x[1] - b.x[0] == b.y[1] - b.y[0]);
      // oracle: adjacency iff a 2D meet
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          int d = meet_dimension(cr.boxes[i], cr.boxes[j]);
          CHECK((d == 2) == cr.host.adjacent(i, j));
          CHECK(d < 3);
          if (!cr.host.adjacent(i, j)) CHECK(d == -1);
        }
    }
  }
}
