#include "lgraph/sl.hpp"

#include <algorithm>
#include <set>
#include <cmath>
#include <map>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

int position(const std::vector<Vertex>& list, Vertex w) {
  auto it = std::find(list.begin(), list.end(), w);
  if (it == list.end()) throw Error("contact " + vname(w) + " missing from leg structure");
  return static_cast<int>(it - list.begin());
}

// Walk along segments starting with (s, horizontal, idx) and call visit on
// each one until stop() says so. Shared by the S_w walks and the outer
// staircase.
struct Walker {
  const SegmentSystem& s;
  std::vector<Vertex> blue;

  template <class Visit>
  void run(Vertex v, bool horiz, int idx, Vertex target, Visit visit) const {
    const int limit = s.unknowns() + 1;
    for (int steps = 0; steps <= limit; ++steps) {
      if (horiz) {
        visit(s.hfirst[v] + idx);
        int p = idx + 1;
        if (p <= static_cast<int>(s.red_in[v].size())) {
          v = s.red_in[v][p - 1];
          horiz = false;
          idx = 0;
        } else {
          if (v == target) return;  // right end of the last shape of the outer staircase
          Vertex y = blue[v];
          if (y < 0) throw Error("staircase walk leaves through " + vname(v));
          idx = position(s.blue_in[y], v) + 1;
          v = y;
          horiz = false;
        }
      } else {
        visit(s.vfirst[v] + idx);
        int p = idx + 1;
        if (p <= static_cast<int>(s.blue_in[v].size())) {
          if (s.blue_in[v][p - 1] == target) return;
          throw Error("staircase walk runs into a contact at " + vname(v));
        }
        horiz = true;
        idx = 0;
      }
    }
    throw Error("staircase walk does not terminate");
  }
};

// Exact Gauss-Jordan on sparse rows.
std::vector<Rational> solve_exact(int m, const std::vector<Equation>& eqs) {
  using Row = std::map<int, Rational>;
  std::vector<Row> rows;
  std::vector<Rational> rhs;
  for (const auto& e : eqs) {
    Row r;
    for (const auto& [k, c] : e.terms) {
      r[k] += c;
      if (r[k] == 0) r.erase(k);
    }
    rows.push_back(std::move(r));
    rhs.push_back(e.rhs);
  }
  const int nr = static_cast<int>(rows.size());
  std::vector<int> pivot_of(m, -1);
  std::vector<char> used(nr, 0);
  for (int col = 0; col < m; ++col) {
    int best = -1;
    for (int i = 0; i < nr; ++i)
      if (!used[i] && rows[i].count(col) && (best < 0 || rows[i].size() < rows[best].size())) best = i;
    if (best < 0) throw SingularSystem();
    used[best] = 1;
    pivot_of[col] = best;
    Rational inv = 1 / rows[best][col];
    for (auto& [k, c] : rows[best]) c *= inv;
    rhs[best] *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == best) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      Rational f = it->second;
      for (const auto& [k, c] : rows[best]) {
        Rational& t = rows[i][k];
        t -= f * c;
        if (t == 0) rows[i].erase(k);
      }
      rhs[i] -= f * rhs[best];
    }
  }
  for (int i = 0; i < nr; ++i)
    if (!used[i] && rhs[i] != 0) throw SingularSystem();
  std::vector<Rational> x(m);
  for (int col = 0; col < m; ++col) x[col] = rhs[pivot_of[col]];
  return x;
}

SegmentSolution solve_float(int m, const std::vector<Equation>& eqs) {
  std::vector<Eigen::Triplet<double>> trips;
  Eigen::VectorXd b(static_cast<Eigen::Index>(eqs.size()));
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (const auto& [k, c] : eqs[i].terms) trips.emplace_back(static_cast<int>(i), k, to_double(c));
    b[static_cast<Eigen::Index>(i)] = to_double(eqs[i].rhs);
  }
  Eigen::SparseMatrix<double> a(static_cast<Eigen::Index>(eqs.size()), m);
  a.setFromTriplets(trips.begin(), trips.end());
  a.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) throw SingularSystem();
  Eigen::VectorXd x = lu.solve(b);
  SegmentSolution sol;
  sol.approximate = true;
  sol.residual = (a * x - b).cwiseAbs().maxCoeff();
  for (int i = 0; i < m; ++i) sol.lengths.emplace_back(x[i]);
  return sol;
}

// Shapes per host vertex, v_n synthesized.
std::vector<LShape> host_shapes(const LRepresentation& rep, const SchnyderRealizer& r, const GreenDeletion& d) {
  std::vector<LShape> shapes(r.n());
  for (Vertex i = 0; i < rep.host.num_vertices(); ++i) shapes[d.to_host[i]] = rep.shapes[i];
  shapes[r.outer[2]] = vn_shape(rep.shapes[rep.v1], rep.shapes[rep.v2]);
  return shapes;
}

}  // namespace

SegmentSystem build_segment_system(const SchnyderRealizer& r) {
  auto check = validate_realizer(r);
  if (!check.ok()) throw NotTriangulation("invalid realizer: " + check.summary());
  const auto& h = r.host;
  const int n = r.n();
  const auto [v1, v2, vn] = r.outer;
  SegmentSystem s;
  s.realizer = r;
  s.red_in.assign(n, {});
  s.blue_in.assign(n, {});
  s.vfirst.assign(n, -1);
  s.hfirst.assign(n, -1);
  auto red = r.parents(Color::Red), blue = r.parents(Color::Blue);
  red[v2] = v1;  // the top of v2 lies on the horizontal leg of v1

  for (Vertex v = 0; v < n; ++v) {
    if (v == vn) continue;
    std::vector<Vertex> seq;
    for (Vertex w : h.neighbors(v)) {
      int e = h.edge_index(v, w);
      if (w != vn && r.color[e] != Color::Green) seq.push_back(w);
    }
    Vertex start = v == v1 ? v2 : red[v];
    std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), start), seq.end());
    for (Vertex w : seq) {
      if (red[w] == v) s.red_in[v].push_back(w);
      if (blue[w] == v) s.blue_in[v].push_back(w);
    }
    // clockwise lists run right to left and bottom to top
    std::reverse(s.red_in[v].begin(), s.red_in[v].end());
    std::reverse(s.blue_in[v].begin(), s.blue_in[v].end());
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == vn) continue;
    s.vfirst[v] = s.unknowns();
    for (int j = 0; j < s.vcount(v); ++j) s.segments.push_back({v, false, j});
    s.hfirst[v] = s.unknowns();
    for (int j = 0; j < s.hcount(v); ++j) s.segments.push_back({v, true, j});
  }
  auto inner = [&](Vertex v) { return !r.is_outer(v); };
  for (auto& seg : s.segments) seg.high = inner(seg.owner) ? seg.owner : kOuterRegion;

  auto eq = [&](std::vector<std::pair<int, Rational>> t, Rational rhs, const char* kind) {
    s.equations.push_back({std::move(t), std::move(rhs), kind});
  };
  // (a) paired segments at each contact
  for (Vertex w = 0; w < n; ++w) {
    if (w == vn || w == v1) continue;
    Vertex x = red[w];
    int i = position(s.red_in[x], w) + 1;
    s.pairs.push_back({s.hfirst[x] + i - 1, s.vfirst[w]});
    if (w == v2) continue;
    Vertex y = blue[w];
    int j = position(s.blue_in[y], w) + 1;
    s.pairs.push_back({s.hfirst[w] + s.hcount(w) - 1, s.vfirst[y] + j});
  }
  for (auto [a, b] : s.pairs) eq({{a, 1}, {b, -1}}, 0, "contact");

  // (b) closure of the region between L_w and its staircase S_w
  Walker walk{s, blue};
  walk.blue[v1] = walk.blue[v2] = -1;
  for (Vertex w = 0; w < n; ++w) {
    if (!inner(w)) continue;
    std::vector<std::pair<int, Rational>> th, tv;
    walk.run(red[w], true, position(s.red_in[red[w]], w) + 1, w, [&](int k) {
      s.segments[k].low = w;
      (s.segments[k].horizontal ? th : tv).push_back({k, 1});
    });
    for (int j = 0; j < s.hcount(w); ++j) th.push_back({s.hfirst[w] + j, -1});
    for (int j = 0; j < s.vcount(w); ++j) tv.push_back({s.vfirst[w] + j, -1});
    eq(std::move(th), 0, "closure-h");
    eq(std::move(tv), 0, "closure-v");
  }
  walk.run(v1, false, 0, v2, [&](int k) { s.segments[k].low = kSourceRegion; });

  // (c) equal legs at v1 and v2, (d) scale and the free excess of v1
  for (Vertex o : {v1, v2}) {
    std::vector<std::pair<int, Rational>> t;
    for (int j = 0; j < s.hcount(o); ++j) t.push_back({s.hfirst[o] + j, 1});
    for (int j = 0; j < s.vcount(o); ++j) t.push_back({s.vfirst[o] + j, -1});
    eq(std::move(t), 0, "equilateral");
  }
  eq({{s.vfirst[v1], 1}}, 1, "normalize");
  eq({{s.hfirst[v1] + s.hcount(v1) - 1, 1}, {s.vfirst[v2], -1}}, 0, "excess");
  if (static_cast<int>(s.equations.size()) != s.unknowns())
    throw Error("segment system is not square: " + std::to_string(s.equations.size()) + " equations, " +
                std::to_string(s.unknowns()) + " unknowns");
  return s;
}

SegmentSolution solve_segment_system(const SegmentSystem& s, int exact_limit) {
  if (s.realizer.n() > exact_limit) return solve_float(s.unknowns(), s.equations);
  return {solve_exact(s.unknowns(), s.equations), false, 0};
}

std::string sign_pattern(const std::vector<Rational>& x) {
  std::string out;
  for (const auto& v : x) out.push_back(v > 0 ? '+' : v < 0 ? '-' : '0');
  return out;
}

LRepresentation realize_segments(const SegmentSystem& s, const std::vector<Rational>& lengths) {
  const auto& r = s.realizer;
  const auto [v1, v2, vn] = r.outer;
  auto sum = [&](int first, int count) {
    Rational t = 0;
    for (int j = 0; j < count; ++j) t += lengths[first + j];
    return t;
  };
  auto red = r.parents(Color::Red);
  red[v2] = v1;
  std::vector<LShape> shapes(r.n());
  shapes[v1] = {{0, sum(s.vfirst[v1], s.vcount(v1))}, {sum(s.hfirst[v1], s.hcount(v1)), 0}};
  for (Vertex v : canonical_order_from_realizer(r).order) {
    if (v == v1 || v == vn) continue;
    Vertex x = red[v];
    int i = position(s.red_in[x], v) + 1;
    Point top{shapes[x].top.x + sum(s.hfirst[x], i), shapes[x].right.y};
    Rational bend_y = top.y - sum(s.vfirst[v], s.vcount(v));
    shapes[v] = {top, {top.x + sum(s.hfirst[v], s.hcount(v)), bend_y}};
  }
  auto d = delete_green(r);
  LRepresentation rep{d.graph, d.v1, d.v2, std::vector<LShape>(d.graph.num_vertices())};
  for (Vertex i = 0; i < d.graph.num_vertices(); ++i) rep.shapes[i] = shapes[d.to_host[i]];
  return rep;
}

Report validate_sl(const LRepresentation& rep, const SchnyderRealizer& r) {
  Report out = validate_lrep(rep);
  if (!out.ok()) return out;
  auto d = delete_green(r);
  if (rep.host.num_vertices() != d.graph.num_vertices() || rep.v1 != d.v1 || rep.v2 != d.v2) {
    out.fail("representation does not belong to the realizer");
    return out;
  }
  auto shapes = host_shapes(rep, r, d);
  auto green = r.parents(Color::Green);

  // collinearity reading
  Report lines;
  for (Vertex v = 0; v < r.n(); ++v) {
    const auto& s = shapes[v];
    Rational c = s.top.x + s.top.y;
    if (s.right.x + s.right.y != c) lines.fail("endpoints of " + vname(v) + " are not on a slope -1 line");
    for (Vertex w = 0; w < r.n(); ++w)
      if (!r.is_outer(w) && green[w] == v) {
        Point b = shapes[w].bend();
        if (b.x + b.y != c) lines.fail("bend of " + vname(w) + " is off the line of " + vname(v));
      }
  }

  // paired-segment reading: leg points from the actual contacts
  const int m = rep.host.num_vertices();
  std::vector<std::vector<Rational>> vpts(m), hpts(m);
  struct Meet {
    Vertex carrier, other;
    bool top;
    Point p;
  };
  std::vector<Meet> meets;
  for (Vertex a = 0; a < m; ++a) {
    vpts[a] = {rep.shapes[a].top.y, rep.shapes[a].right.y};
    hpts[a] = {rep.shapes[a].top.x, rep.shapes[a].right.x};
  }
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = a + 1; b < m; ++b) {
      auto c = classify(rep.shapes[a], rep.shapes[b]);
      if (c.kind != ContactKind::TopOnHorizontal && c.kind != ContactKind::RightOnVertical) continue;
      Vertex car = c.reversed ? b : a, oth = c.reversed ? a : b;
      bool top = c.kind == ContactKind::TopOnHorizontal;
      meets.push_back({car, oth, top, c.where});
      (top ? hpts[oth] : vpts[oth]).push_back(top ? c.where.x : c.where.y);
    }
  for (Vertex a = 0; a < m; ++a) {
    std::sort(vpts[a].begin(), vpts[a].end());
    std::sort(hpts[a].begin(), hpts[a].end());
  }
  // length of the piece of a leg on one side of t
  auto before = [](const std::vector<Rational>& pts, const Rational& t) {
    auto it = std::lower_bound(pts.begin(), pts.end(), t);
    return t - *(it - 1);
  };
  Report paired;
  for (const auto& mt : meets) {
    Rational hseg, vseg;
    if (mt.top) {
      hseg = before(hpts[mt.other], mt.p.x);
      vseg = before(vpts[mt.carrier], mt.p.y);
    } else {
      hseg = before(hpts[mt.carrier], mt.p.x);
      vseg = before(vpts[mt.other], mt.p.y);
    }
    if (hseg != vseg)
      paired.fail("segments paired at " + vname(mt.carrier) + "-" + vname(mt.other) + " differ: " +
                  to_string(hseg) + " vs " + to_string(vseg));
  }
  for (Vertex v = 0; v < r.n(); ++v)
    if (!shapes[v].equilateral()) paired.fail("L of " + vname(v) + " is not equilateral");

  out.merge(lines);
  out.merge(paired);
  if (lines.ok() != paired.ok()) out.fail("collinearity and paired-segment readings disagree");
  return out;
}

SLOutcome felsner_iterate(const SchnyderRealizer& r0, int max_iters) {
  SLOutcome out;
  out.realizer = r0;
  const auto& h = r0.host;
  // every triangle of the host except the outer face; facial or separating
  std::vector<std::array<Vertex, 3>> faces;
  for (const auto& e : h.edges()) {
    Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    for (Vertex c : h.neighbors(a))
      if (c > b && h.adjacent(b, c) && !(r0.is_outer(a) && r0.is_outer(b) && r0.is_outer(c))) faces.push_back({a, b, c});
  }
  std::sort(faces.begin(), faces.end());
  std::set<std::uint64_t> visited;
  for (int it = 0;; ++it) {
    auto sys = build_segment_system(out.realizer);
    out.solution = solve_segment_system(sys);
    const auto& x = out.solution.lengths;
    TraceEntry te{realizer_hash(out.realizer), sign_pattern(x), *std::min_element(x.begin(), x.end())};
    out.trace.push_back(te);
    if (te.min_entry > 0) {
      out.rep = realize_segments(sys, x);
      out.converged = true;
      return out;
    }
    if (it >= max_iters) return out;

    // cyclically oriented inner triangles, ranked by the smallest value their
    // vertices own, ties by index
    std::vector<std::pair<Rational, int>> ranked;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      const auto& fc = faces[f];
      int forward = 0, backward = 0;
      for (int k = 0; k < 3; ++k) {
        Vertex a = fc[k], b = fc[(k + 1) % 3];
        Vertex t = out.realizer.tail[h.edge_index(a, b)];
        forward += t == a;
        backward += t == b;
      }
      if (forward != 3 && backward != 3) continue;
      std::optional<Rational> low;
      for (int k = 0; k < sys.unknowns(); ++k) {
        Vertex o = sys.segments[k].owner;
        if (o != fc[0] && o != fc[1] && o != fc[2]) continue;
        if (!low || x[k] < *low) low = x[k];
      }
      if (low) ranked.emplace_back(*low, f);
    }
    std::sort(ranked.begin(), ranked.end());
    visited.insert(te.realizer_hash);
    // first flip that leads somewhere new; a flip back would cycle
    std::optional<SchnyderRealizer> next;
    for (const auto& [low, f] : ranked) {
      auto tail = out.realizer.tail;
      const auto& fc = faces[f];
      for (int k = 0; k < 3; ++k) {
        int e = h.edge_index(fc[k], fc[(k + 1) % 3]);
        const auto& ed = h.edges()[e];
        tail[e] = tail[e] == ed.u ? ed.v : ed.u;
      }
      auto cand = realizer_from_orientation(h, out.realizer.outer, std::move(tail));
      if (visited.count(realizer_hash(cand))) continue;
      next = std::move(cand);
      break;
    }
    if (!next) return out;  // nothing left to flip
    out.realizer = std::move(*next);
    auto check = validate_realizer(out.realizer);
    if (!check.ok()) throw Error("face flip produced an invalid realizer: " + check.summary());
  }
}

Rational triangle_meet(const Triangle& a, const Triangle& b) {
  Rational ca = a.top.x + a.top.y, cb = b.top.x + b.top.y;
  return std::min(ca, cb) - std::max(a.bend.x, b.bend.x) - std::max(a.bend.y, b.bend.y);
}

TriangleRepresentation homothetic_triangles(const LRepresentation& rep, const SchnyderRealizer& r) {
  auto check = validate_sl(rep, r);
  if (!check.ok()) throw NotSL(check.summary());
  TriangleRepresentation tr{r.host, {}};
  for (const auto& s : host_shapes(rep, r, delete_green(r))) tr.triangles.push_back({s.bend(), s.top, s.right});
  auto v = validate_triangles(tr);
  if (!v.ok()) throw NotSL("triangles fail validation: " + v.summary());
  return tr;
}

Report validate_triangles(const TriangleRepresentation& tr) {
  Report out;
  const int n = tr.host.num_vertices();
  if (static_cast<int>(tr.triangles.size()) != n) {
    out.fail("triangle count differs from vertex count");
    return out;
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& t = tr.triangles[v];
    Rational size = t.size();
    if (!(size > 0) || t.top.x != t.bend.x || t.right.y != t.bend.y || t.right.x - t.bend.x != size)
      out.fail("triangle " + vname(v) + " is not a positive multiple of the model triangle");
  }
  if (!out.ok()) return out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      Rational s = triangle_meet(tr.triangles[a], tr.triangles[b]);
      bool edge = tr.host.adjacent(a, b);
      if (s > 0) out.fail("triangles " + vname(a) + " and " + vname(b) + " overlap");
      if (s == 0 && !edge) out.fail("triangles " + vname(a) + " and " + vname(b) + " touch but are not adjacent");
      if (s < 0 && edge) out.fail("triangles " + vname(a) + " and " + vname(b) + " are adjacent but apart");
    }
  return out;
}

HeightAssignment cubic_heights(const SchnyderRealizer& r, const std::vector<LShape>& shapes) {
  const int n = r.n();
  HeightAssignment h{std::vector<Rational>(n + 1), "cubic"};
  auto green = r.parents(Color::Green);
  auto order = canonical_order_from_realizer(r).order;
  h.h[n] = 0;
  // sigma_n(v) comes after v in every canonical order
  // the bends of v1 and v2 are corners of L_{v_n}, so they stack on v_n
  green[r.outer[0]] = green[r.outer[1]] = r.outer[2];
  for (auto it = order.rbegin(); it != order.rend(); ++it) h.h[*it] = h.h[green[*it]] + shapes[*it].vertical();
  return h;
}

CuboidRepresentation cubes_from_sl(const LRepresentation& rep, const SchnyderRealizer& r) {
  auto check = validate_sl(rep, r);
  if (!check.ok()) throw NotSL(check.summary());
  auto shapes = host_shapes(rep, r, delete_green(r));
  auto h = cubic_heights(r, shapes);
  CuboidRepresentation cr{r.host, {}, shapes, false};
  for (Vertex v = 0; v < r.n(); ++v) {
    const auto& s = shapes[v];
    cr.boxes.push_back(Box{{s.top.x, s.right.x}, {s.right.y, s.top.y}, {h.h[v] - s.vertical(), h.h[v]}});
  }
  cr.proper = validate_cuboids(cr).proper;
  return cr;
}

Report visibility_flow_check(const SegmentSystem& s, const std::vector<Rational>& lengths) {
  Report out;
  const int n = s.realizer.n();
  if (static_cast<int>(lengths.size()) != s.unknowns()) {
    out.fail("length vector does not match the system");
    return out;
  }
  // net flow into each region, separately for G_h and G_v
  std::vector<Rational> net_h(n), net_v(n);
  std::vector<int> deg_h(n, 0), deg_v(n, 0);
  for (int k = 0; k < s.unknowns(); ++k) {
    const auto& seg = s.segments[k];
    auto& net = seg.horizontal ? net_h : net_v;
    auto& deg = seg.horizontal ? deg_h : deg_v;
    if (seg.low >= 0) {
      net[seg.low] -= lengths[k];
      ++deg[seg.low];
    }
    if (seg.high >= 0) {
      net[seg.high] += lengths[k];
      ++deg[seg.high];
    }
  }
  for (Vertex w = 0; w < n; ++w) {
    if (s.realizer.is_outer(w)) continue;
    if (deg_h[w] < 2 || deg_v[w] < 2) out.fail("region of " + vname(w) + " lacks in- or out-edges");
    if (net_h[w] != 0) out.fail("G_h flow not conserved at region " + vname(w) + " (excess " + to_string(net_h[w]) + ")");
    if (net_v[w] != 0) out.fail("G_v flow not conserved at region " + vname(w) + " (excess " + to_string(net_v[w]) + ")");
  }
  for (auto [a, b] : s.pairs)
    if (lengths[a] != lengths[b])
      out.fail("crossing edges " + std::to_string(a) + " and " + std::to_string(b) + " carry different flow");
  return out;
}

}  // namespace lgraph
