#include "lgraph/lrep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

std::string pstr(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

bool within(const Rational& t, const Rational& lo, const Rational& hi) { return lo <= t && t <= hi; }

// One exposed piece of the staircase per boundary vertex: its vertical leg
// from `vtop` down to the bend and its horizontal leg from the bend to
// `hright`.
struct Stair {
  Vertex v;
  Rational vtop;
  Rational hright;
};

using Placer = std::function<LShape(const LShape& x, const Stair& sx, const LShape& y, const Stair& sy)>;

std::vector<LShape> grow(const PlaneGraph& g, const TwoCanonicalOrder& o, const Placer& place,
                         const EquilateralObserver& observe, const Rational& level) {
  const int n = g.num_vertices();
  if (n < 2 || static_cast<int>(o.order.size()) != n) throw InvalidOrder("order length differs from vertex count");
  auto att = attachments(g, o);
  std::vector<std::optional<LShape>> placed(n);
  auto [b1, b2] = base_shapes();
  placed[o.v1()] = b1;
  placed[o.v2()] = b2;
  std::vector<Stair> stairs{{o.v1(), b1.top.y, b2.top.x}, {o.v2(), b2.top.y, b2.right.x}};
  if (observe) observe(placed, level);
  for (int k = 2; k < n; ++k) {
    Vertex v = o.order[k];
    auto find = [&](Vertex w) {
      return std::find_if(stairs.begin(), stairs.end(), [&](const Stair& s) { return s.v == w; }) - stairs.begin();
    };
    auto a = find(att.first[v]), b = find(att.second[v]);
    LShape s = place(*placed[att.first[v]], stairs[a], *placed[att.second[v]], stairs[b]);
    placed[v] = s;
    stairs[a].hright = s.top.x;
    stairs[b].vtop = s.right.y;
    stairs.erase(stairs.begin() + a + 1, stairs.begin() + b);
    stairs.insert(stairs.begin() + a + 1, Stair{v, s.top.y, s.right.x});
    if (observe) observe(placed, level);
  }
  std::vector<LShape> shapes;
  for (auto& p : placed) shapes.push_back(*p);
  return shapes;
}

struct PairContact {
  Vertex a, b;  // a carries the endpoint unless the kind is a failure
  Contact c;
};

std::vector<PairContact> all_contacts(const std::vector<LShape>& shapes, bool parallel) {
  const int n = static_cast<int>(shapes.size());
  std::vector<std::vector<PairContact>> per(n);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto c = classify(shapes[i], shapes[j]);
      if (c.kind == ContactKind::None) continue;
      if (c.reversed)
        per[i].push_back({j, i, c});
      else
        per[i].push_back({i, j, c});
    }
  std::vector<PairContact> out;
  for (auto& p : per) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Clockwise rotation read off the contacts: out-red (top), out-blue (right),
// incoming reds right to left, incoming blues bottom to top.
std::vector<std::vector<Vertex>> geometric_rotation(int n, const std::vector<PairContact>& contacts) {
  std::vector<Vertex> out_red(n, -1), out_blue(n, -1);
  std::vector<std::vector<std::pair<Rational, Vertex>>> in_red(n), in_blue(n);
  for (const auto& pc : contacts) {
    if (pc.c.kind == ContactKind::TopOnHorizontal) {
      out_red[pc.a] = pc.b;
      in_red[pc.b].push_back({-pc.c.where.x, pc.a});
    } else if (pc.c.kind == ContactKind::RightOnVertical) {
      out_blue[pc.a] = pc.b;
      in_blue[pc.b].push_back({pc.c.where.y, pc.a});
    }
  }
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    if (out_red[v] >= 0) rot[v].push_back(out_red[v]);
    if (out_blue[v] >= 0) rot[v].push_back(out_blue[v]);
    std::sort(in_red[v].begin(), in_red[v].end());
    std::sort(in_blue[v].begin(), in_blue[v].end());
    for (auto& [k, w] : in_red[v]) rot[v].push_back(w);
    for (auto& [k, w] : in_blue[v]) rot[v].push_back(w);
  }
  return rot;
}

Report validate_impl(const LRepresentation& rep, bool parallel) {
  Report out;
  const auto& g = rep.host;
  const int n = g.num_vertices();
  if (static_cast<int>(rep.shapes.size()) != n) {
    out.fail("shape count differs from vertex count");
    return out;
  }
  if (n < 2 || rep.v1 < 0 || rep.v1 >= n || rep.v2 < 0 || rep.v2 >= n || rep.v1 == rep.v2) {
    out.fail("base edge vertices out of range");
    return out;
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& s = rep.shapes[v];
    if (!(s.top.x < s.right.x) || !(s.right.y < s.top.y))
      out.fail("shape " + vname(v) + " has a leg of non-positive length");
  }
  if (!out.ok()) return out;

  auto contacts = all_contacts(rep.shapes, parallel);
  std::set<std::pair<Vertex, Vertex>> touching;
  bool degenerate = false;
  for (const auto& pc : contacts) {
    std::string who = vname(pc.a) + " and " + vname(pc.b);
    switch (pc.c.kind) {
      case ContactKind::Overlap: out.fail("shapes " + who + " overlap along a segment at " + pstr(pc.c.where)); break;
      case ContactKind::Crossing: out.fail("shapes " + who + " cross at " + pstr(pc.c.where)); break;
      case ContactKind::Multiple: out.fail("shapes " + who + " meet in several points, e.g. " + pstr(pc.c.where)); break;
      case ContactKind::Degenerate:
        out.fail("shapes " + who + " touch degenerately at " + pstr(pc.c.where));
        degenerate = true;
        [[fallthrough]];
      default: touching.insert({std::min(pc.a, pc.b), std::max(pc.a, pc.b)});
    }
  }
  for (const auto& e : g.edges())
    if (!touching.count({std::min(e.u, e.v), std::max(e.u, e.v)}))
      out.fail("edge " + vname(e.u) + "-" + vname(e.v) + " has no contact");
  for (auto [a, b] : touching)
    if (!g.adjacent(a, b)) out.fail("contact " + vname(a) + "-" + vname(b) + " is not an edge");

  for (Vertex w = 0; w < n; ++w) {
    if (w != rep.v1 && !(rep.shapes[w].right.y < rep.shapes[rep.v1].right.y))
      out.fail("horizontal leg of " + vname(w) + " is not below that of v1");
    if (w != rep.v2 && !(rep.shapes[w].top.x < rep.shapes[rep.v2].top.x))
      out.fail("vertical leg of " + vname(w) + " is not left of that of v2");
  }
  if (!out.ok() || degenerate) return out;

  std::vector<std::optional<LShape>> opt(rep.shapes.begin(), rep.shapes.end());
  auto stair = trace_staircase(opt, rep.v1, rep.v2);
  if (!stair) {
    out.fail("outer staircase cannot be traced from v1 to v2");
    return out;
  }
  PlaneGraph cg(n, g.edges());
  try {
    cg.set_embedding(geometric_rotation(n, contacts));
  } catch (const Error& e) {
    out.fail(std::string("contact rotation is not planar: ") + e.what());
    return out;
  }
  const auto& sv = stair->vertices;
  std::vector<Vertex> expect{rep.v1, rep.v2};
  expect.insert(expect.end(), sv.rbegin() + 1, sv.rend() - 1);
  if (!same_cycle(cg.face_from_dart(rep.v1, rep.v2), expect))
    out.fail("traced staircase does not match the outer face of the contact graph");
  return out;
}

}  // namespace

Contact classify(const LShape& a, const LShape& b) {
  std::vector<Point> pts;
  auto add = [&](Point p) {
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  };
  // collinear legs
  if (a.top.x == b.top.x) {
    Rational lo = std::max(a.right.y, b.right.y), hi = std::min(a.top.y, b.top.y);
    if (lo < hi) return {ContactKind::Overlap, false, {a.top.x, lo}};
    if (lo == hi) add({a.top.x, lo});
  }
  if (a.right.y == b.right.y) {
    Rational lo = std::max(a.top.x, b.top.x), hi = std::min(a.right.x, b.right.x);
    if (lo < hi) return {ContactKind::Overlap, false, {lo, a.right.y}};
    if (lo == hi) add({lo, a.right.y});
  }
  // vertical of one against horizontal of the other
  if (within(a.top.x, b.top.x, b.right.x) && within(b.right.y, a.right.y, a.top.y)) add({a.top.x, b.right.y});
  if (within(b.top.x, a.top.x, a.right.x) && within(a.right.y, b.right.y, b.top.y)) add({b.top.x, a.right.y});

  if (pts.empty()) return {};
  if (pts.size() > 1) return {ContactKind::Multiple, false, pts[0]};
  const Point& p = pts[0];
  bool a_end = p == a.top || p == a.right, b_end = p == b.top || p == b.right;
  bool a_bend = p == a.bend(), b_bend = p == b.bend();
  if ((a_end || a_bend) && (b_end || b_bend)) return {ContactKind::Degenerate, false, p};
  if (a_end) {
    if (p == a.top && p.y == b.right.y) return {ContactKind::TopOnHorizontal, false, p};
    if (p == a.right && p.x == b.top.x) return {ContactKind::RightOnVertical, false, p};
    return {ContactKind::Crossing, false, p};
  }
  if (b_end) {
    if (p == b.top && p.y == a.right.y) return {ContactKind::TopOnHorizontal, true, p};
    if (p == b.right && p.x == a.top.x) return {ContactKind::RightOnVertical, true, p};
    return {ContactKind::Crossing, true, p};
  }
  return {ContactKind::Crossing, false, p};
}

std::pair<LShape, LShape> base_shapes() {
  return {LShape{{1, 2}, {4, -1}}, LShape{{3, -1}, {5, -3}}};
}

Rational equilateral_level() { return 1; }

std::optional<Staircase> trace_staircase(const std::vector<std::optional<LShape>>& shapes, Vertex v1, Vertex v2) {
  const int n = static_cast<int>(shapes.size());
  if (!shapes[v1] || !shapes[v2]) return std::nullopt;
  Staircase st;
  Vertex cur = v1;
  Rational entry = shapes[v1]->top.y;
  st.points.push_back(shapes[v1]->top);
  for (int guard = 0; guard <= n; ++guard) {
    const LShape& s = *shapes[cur];
    st.vertices.push_back(cur);
    // nothing may touch the exposed part of the vertical leg from the left
    for (Vertex w = 0; w < n; ++w)
      if (w != cur && shapes[w] && shapes[w]->right.x == s.top.x && s.right.y < shapes[w]->right.y &&
          shapes[w]->right.y < entry)
        return std::nullopt;
    st.points.push_back(s.bend());
    Vertex next = -1;
    for (Vertex w = 0; w < n; ++w)
      if (w != cur && shapes[w] && shapes[w]->top.y == s.right.y && s.top.x < shapes[w]->top.x &&
          shapes[w]->top.x <= s.right.x && (next < 0 || shapes[w]->top.x < shapes[next]->top.x))
        next = w;
    if (next >= 0) {
      st.points.push_back(shapes[next]->top);
      cur = next;
      entry = shapes[next]->top.y;
      continue;
    }
    st.points.push_back(s.right);
    if (cur == v2) return st;
    for (Vertex w = 0; w < n; ++w)
      if (w != cur && shapes[w] && shapes[w]->top.x == s.right.x && shapes[w]->right.y < s.right.y &&
          s.right.y < shapes[w]->top.y)
        next = w;
    if (next < 0) return std::nullopt;
    cur = next;
    entry = s.right.y;
  }
  return std::nullopt;
}

LRepresentation build_lrep(const PlaneGraph& g, const TwoCanonicalOrder& o) {
  auto midpoint = [](const LShape& x, const Stair& sx, const LShape& y, const Stair& sy) {
    return LShape{{(x.top.x + sx.hright) / 2, x.right.y}, {y.top.x, (y.right.y + sy.vtop) / 2}};
  };
  LRepresentation rep{g, o.v1(), o.v2(), grow(g, o, midpoint, {}, 0)};
  auto r = validate_lrep(rep);
  if (!r.ok()) throw Error("constructed representation failed validation: " + r.summary());
  return rep;
}

Report validate_lrep(const LRepresentation& rep) { return validate_impl(rep, true); }
Report validate_lrep_serial(const LRepresentation& rep) { return validate_impl(rep, false); }

EdgeLabeling induced_labeling(const LRepresentation& rep) {
  const int n = rep.host.num_vertices();
  auto contacts = all_contacts(rep.shapes, true);
  EdgeLabeling el;
  el.host = PlaneGraph(n, rep.host.edges());
  el.v1 = rep.v1;
  el.v2 = rep.v2;
  el.color.assign(el.host.num_edges(), Color::None);
  el.tail.assign(el.host.num_edges(), -1);
  for (const auto& pc : contacts) {
    if (pc.c.kind != ContactKind::TopOnHorizontal && pc.c.kind != ContactKind::RightOnVertical)
      throw DegenerateRep("shapes " + vname(pc.a) + " and " + vname(pc.b) + " meet at " + pstr(pc.c.where));
    int e = el.host.edge_index(pc.a, pc.b);
    if (e < 0) throw DegenerateRep("contact " + vname(pc.a) + "-" + vname(pc.b) + " is not an edge");
    bool base = (pc.a == rep.v1 && pc.b == rep.v2) || (pc.a == rep.v2 && pc.b == rep.v1);
    if (base) continue;
    el.color[e] = pc.c.kind == ContactKind::TopOnHorizontal ? Color::Red : Color::Blue;
    el.tail[e] = pc.a;
  }
  el.host.set_embedding(geometric_rotation(n, contacts));
  el.host.set_embedding(
      [&] {
        std::vector<std::vector<Vertex>> rot(n);
        for (Vertex v = 0; v < n; ++v) rot[v] = el.host.neighbors(v);
        return rot;
      }(),
      el.host.face_from_dart(el.v1, el.v2));
  el.host.labels = rep.host.labels;
  return el;
}

LRepresentation equilateralize(const LRepresentation& rep, const EquilateralObserver& observe) {
  auto el = induced_labeling(rep);
  auto o = two_canonical_from_labeling(el);
  const Rational c = equilateral_level();
  auto place = [&](const LShape& x, const Stair& sx, const LShape& y, const Stair& sy) {
    const Rational& yx = x.right.y;  // level of the contacted horizontal
    const Rational& xy = y.top.x;    // position of the contacted vertical
    Rational sup = std::min<Rational>({sx.hright + yx - c, sy.vtop + xy - c, (yx + xy - c) / 2});
    if (sup <= 0) throw Error("line x + y = c no longer crosses the staircase");
    Rational d = c + sup / 2;
    return LShape{{d - yx, yx}, {xy, d - xy}};
  };
  LRepresentation out{rep.host, rep.v1, rep.v2, grow(el.host, o, place, observe, c)};
  auto r = validate_lrep(out);
  if (!r.ok()) throw Error("equilateral representation failed validation: " + r.summary());
  auto el2 = induced_labeling(out);
  if (el2.color != el.color || el2.tail != el.tail) throw Error("equilateralization changed the labeling");
  return out;
}

Completion complete_to_triangulation(const LRepresentation& rep) {
  auto el = induced_labeling(rep);
  const int n = rep.host.num_vertices();
  const Vertex vn = n;
  const auto& sh = rep.shapes;
  Rational left = sh[0].top.x;
  for (const auto& s : sh) left = std::min(left, s.top.x);
  left -= 1;

  // green target of every shape: first vertical leg hit by the leftward ray
  std::vector<Vertex> green(n, vn);
  for (Vertex w = 0; w < n; ++w) {
    const Rational& y = sh[w].right.y;
    const Rational& x = sh[w].top.x;
    Vertex hit = vn;
    for (Vertex u = 0; u < n; ++u)
      if (u != w && sh[u].top.x < x && within(y, sh[u].right.y, sh[u].top.y) &&
          (hit == vn || sh[u].top.x > sh[hit].top.x))
        hit = u;
    Rational stop = hit == vn ? left : sh[hit].top.x;
    if (hit != vn && (y == sh[hit].right.y || y == sh[hit].top.y))
      throw DegenerateRep("ray from " + vname(w) + " ends at an endpoint of " + vname(hit));
    for (Vertex u = 0; u < n; ++u)
      if (u != w && sh[u].right.y == y && sh[u].top.x < x && sh[u].right.x >= stop)
        throw DegenerateRep("ray from " + vname(w) + " runs along the horizontal leg of " + vname(u));
    green[w] = hit;
  }
  if (green[rep.v1] != vn || green[rep.v2] != vn) throw DegenerateRep("rays from v1 and v2 must reach v_n");

  std::vector<Edge> edges = rep.host.edges();
  std::vector<Color> color = el.color;
  std::vector<Vertex> tail = el.tail;
  for (Vertex w = 0; w < n; ++w) {
    edges.push_back({w, green[w]});
    bool outer = w == rep.v1 || w == rep.v2;
    color.push_back(outer ? Color::None : Color::Green);
    tail.push_back(outer ? -1 : w);
  }
  PlaneGraph h(n + 1, edges);

  // clockwise: OR, IG* (top to bottom), OB, IR*, OG, IB*
  std::vector<std::vector<std::pair<Rational, Vertex>>> in_green(n + 1);
  for (Vertex w = 0; w < n; ++w) in_green[green[w]].push_back({-sh[w].right.y, w});
  std::vector<std::vector<Vertex>> rot(n + 1);
  for (Vertex v = 0; v <= n; ++v) {
    std::sort(in_green[v].begin(), in_green[v].end());
    std::vector<Vertex> ig;
    for (auto& [k, w] : in_green[v]) ig.push_back(w);
    if (v == vn) {
      rot[v] = ig;
      continue;
    }
    const auto& base = el.host.neighbors(v);  // OR, OB, IR*, IB* with gaps where absent
    std::vector<Vertex> orr, ob, rest;
    for (Vertex w : base) {
      int e = el.host.edge_index(v, w);
      bool out_edge = el.tail[e] == v || (v == rep.v2 && w == rep.v1);
      if (out_edge && (el.color[e] == Color::Red || el.color[e] == Color::None))
        orr.push_back(w);
      else if (out_edge)
        ob.push_back(w);
      else
        rest.push_back(w);
    }
    auto& r = rot[v];
    r.insert(r.end(), orr.begin(), orr.end());
    r.insert(r.end(), ig.begin(), ig.end());
    r.insert(r.end(), ob.begin(), ob.end());
    // rest is IR* then IB*; the green out-edge sits between them
    auto split = std::find_if(rest.begin(), rest.end(), [&](Vertex w) {
      return el.color[el.host.edge_index(v, w)] == Color::Blue;
    });
    r.insert(r.end(), rest.begin(), split);
    r.push_back(green[v]);
    r.insert(r.end(), split, rest.end());
  }
  h.set_embedding(std::move(rot), {rep.v1, rep.v2, vn});

  Completion out{h, {}};
  out.realizer.host = h;
  out.realizer.outer = {rep.v1, rep.v2, vn};
  out.realizer.color.assign(h.num_edges(), Color::None);
  out.realizer.tail.assign(h.num_edges(), -1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    int e = h.edge_index(edges[i].u, edges[i].v);
    out.realizer.color[e] = color[i];
    out.realizer.tail[e] = tail[i];
  }
  auto r = validate_realizer(out.realizer);
  if (!r.ok()) throw DegenerateRep("completion is not a Schnyder realizer: " + r.summary());
  return out;
}

}  // namespace lgraph
