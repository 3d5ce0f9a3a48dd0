#include "lgraph/lift3d.hpp"

#include <algorithm>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

CuboidCheck validate_impl(const CuboidRepresentation& cr, bool parallel) {
  CuboidCheck out;
  const auto& g = cr.host;
  const int n = g.num_vertices();
  if (static_cast<int>(cr.boxes.size()) != n) {
    out.report.fail("box count differs from vertex count");
    return out;
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& b = cr.boxes[v];
    if (!(b.x[0] < b.x[1] && b.y[0] < b.y[1] && b.z[0] < b.z[1]))
      out.report.fail("box " + std::to_string(v) + " is flat");
  }
  if (!out.report.ok()) return out;
  std::vector<std::vector<std::pair<Vertex, BoxMeet>>> per(n);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto m = classify(cr.boxes[i], cr.boxes[j]);
      if (m != BoxMeet::Disjoint || g.adjacent(i, j)) per[i].push_back({j, m});
    }
  bool proper = true;
  for (Vertex i = 0; i < n; ++i)
    for (auto [j, m] : per[i]) {
      std::string who = std::to_string(i) + " and " + std::to_string(j);
      bool edge = g.adjacent(i, j);
      if (m == BoxMeet::Overlap) out.report.fail("boxes " + who + " share interior points");
      if (!edge && m != BoxMeet::Disjoint && m != BoxMeet::Overlap)
        out.report.fail("boxes " + who + " touch but are not adjacent");
      if (edge && m == BoxMeet::Disjoint) out.report.fail("boxes " + who + " are adjacent but disjoint");
      if (edge && m == BoxMeet::Lower) proper = false;
    }
  out.proper = proper && out.report.ok();
  return out;
}

}  // namespace

HeightAssignment heights_from_canonical(const CanonicalOrder& co) {
  const int n = static_cast<int>(co.order.size());
  HeightAssignment h{std::vector<Rational>(n + 1), "canonical"};
  for (int i = 0; i < n; ++i) h.h[co.order[i]] = -(i + 1);
  h.h[n] = -(n + 1);
  return h;
}

Report check_heights(const SchnyderRealizer& r, const HeightAssignment& h, bool strict_tree_only) {
  Report rep;
  const int n = r.n();
  if (static_cast<int>(h.h.size()) != n + 1) {
    rep.fail("height vector must cover the vertices and the dummy");
    return rep;
  }
  if (!(h.h[n] < h.h[r.outer[2]])) rep.fail("dummy is not below v_n");
  auto red = r.parents(Color::Red), blue = r.parents(Color::Blue), green = r.parents(Color::Green);
  for (Vertex v = 0; v < n; ++v) {
    if (r.is_outer(v)) continue;
    std::string name = std::to_string(v);
    if (!(h.h[green[v]] < h.h[v])) rep.fail("h(sigma_n(" + name + ")) is not below h(" + name + ")");
    if (strict_tree_only) continue;
    if (h.h[red[v]] < h.h[v]) rep.fail("h(sigma_1(" + name + ")) is below h(" + name + ")");
    if (h.h[blue[v]] < h.h[v]) rep.fail("h(sigma_2(" + name + ")) is below h(" + name + ")");
  }
  return rep;
}

LShape vn_shape(const LShape& s1, const LShape& s2) {
  return {{s1.top.x, s1.right.y}, {s2.top.x, s2.right.y}};
}

CuboidRepresentation boxes_from_shapes(const SchnyderRealizer& r, const std::vector<LShape>& shapes,
                                       const HeightAssignment& h) {
  const int n = r.n();
  if (static_cast<int>(shapes.size()) != n || static_cast<int>(h.h.size()) != n + 1)
    throw Error("shapes and heights must cover every host vertex");
  auto green = r.parents(Color::Green);
  CuboidRepresentation cr{r.host, {}, shapes, false};
  for (Vertex v = 0; v < n; ++v) {
    const auto& s = shapes[v];
    cr.boxes.push_back(Box{{s.top.x, s.right.x}, {s.right.y, s.top.y}, {h.h[green[v]], h.h[v]}});
  }
  cr.proper = validate_cuboids(cr).proper;
  return cr;
}

CuboidRepresentation lift_cuboids(const LRepresentation& rep, const SchnyderRealizer& r, const HeightAssignment& h) {
  auto d = delete_green(r);
  if (rep.host.num_vertices() != d.graph.num_vertices() || rep.host.num_edges() != d.graph.num_edges())
    throw Error("representation does not match the realizer with v_n and S_n removed");
  for (const auto& e : rep.host.edges())
    if (!d.graph.adjacent(e.u, e.v)) throw Error("representation does not match the realizer with v_n and S_n removed");
  if (rep.v1 != d.v1 || rep.v2 != d.v2) throw Error("base edge differs from (v1, v2) of the realizer");
  std::vector<LShape> shapes(r.n());
  for (Vertex i = 0; i < rep.host.num_vertices(); ++i) shapes[d.to_host[i]] = rep.shapes[i];
  shapes[r.outer[2]] = vn_shape(rep.shapes[rep.v1], rep.shapes[rep.v2]);
  return boxes_from_shapes(r, shapes, h);
}

BoxMeet classify(const Box& a, const Box& b) {
  int zeros = 0;
  for (auto [p, q] : {std::pair{&a.x, &b.x}, std::pair{&a.y, &b.y}, std::pair{&a.z, &b.z}}) {
    Rational len = std::min((*p)[1], (*q)[1]) - std::max((*p)[0], (*q)[0]);
    if (len < 0) return BoxMeet::Disjoint;
    if (len == 0) ++zeros;
  }
  if (zeros == 0) return BoxMeet::Overlap;
  return zeros == 1 ? BoxMeet::Face : BoxMeet::Lower;
}

CuboidCheck validate_cuboids(const CuboidRepresentation& cr) { return validate_impl(cr, true); }
CuboidCheck validate_cuboids_serial(const CuboidRepresentation& cr) { return validate_impl(cr, false); }

}  // namespace lgraph
