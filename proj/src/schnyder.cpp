#include "lgraph/schnyder.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <string>

#include "lgraph/error.hpp"

namespace lgraph {

const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Blue: return "blue";
    case Color::Green: return "green";
    default: return "none";
  }
}

std::vector<Vertex> SchnyderRealizer::parents(Color c) const {
  std::vector<Vertex> par(n(), -1);
  for (int i = 0; i < host.num_edges(); ++i) {
    if (color[i] != c) continue;
    const auto& e = host.edges()[i];
    par[tail[i]] = tail[i] == e.u ? e.v : e.u;
  }
  if (c == Color::Green)
    for (Vertex o : outer) par[o] = dummy();
  return par;
}

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

// Clockwise successor of u around v among vertices with alive[.] set.
Vertex next_alive(const PlaneGraph& g, Vertex v, Vertex u, const std::vector<char>& alive) {
  Vertex w = u;
  for (int k = 0; k < g.degree(v); ++k) {
    w = g.next_cw(v, w);
    if (alive[w]) return w;
  }
  return u;
}

// Orbit of the dart u -> v in the subgraph induced by alive vertices.
std::vector<Vertex> face_alive(const PlaneGraph& g, Vertex u, Vertex v, const std::vector<char>& alive) {
  std::vector<Vertex> face;
  Vertex a = u, b = v;
  do {
    face.push_back(a);
    Vertex c = next_alive(g, b, a, alive);
    a = b;
    b = c;
    if (face.size() > 2 * static_cast<std::size_t>(g.num_edges()) + 2) break;
  } while (a != u || b != v);
  return face;
}

void require_triangulation(const PlaneGraph& h, std::array<Vertex, 3> outer) {
  const int n = h.num_vertices();
  if (n < 3) throw NotTriangulation("fewer than 3 vertices");
  if (h.num_edges() != 3 * n - 6) throw NotTriangulation("edge count is not 3n-6");
  if (!h.embedded()) throw NotTriangulation("graph carries no embedding");
  for (Vertex o : outer)
    if (o < 0 || o >= n) throw NotTriangulation("outer vertex out of range");
  if (!same_cycle(h.face_from_dart(outer[0], outer[1]), {outer[0], outer[1], outer[2]}))
    throw NotTriangulation("(v1, v2, vn) is not a clockwise outer face");
}

}  // namespace

CanonicalOrder shelling_order(const PlaneGraph& h, std::array<Vertex, 3> outer) {
  require_triangulation(h, outer);
  const int n = h.num_vertices();
  const auto [v1, v2, vn] = outer;
  std::vector<char> alive(n, 1);
  std::vector<int> on_path(n, 0);
  std::vector<Vertex> path{v1, vn, v2};
  for (Vertex v : path) on_path[v] = 1;
  std::vector<Vertex> removed;

  while (path.size() > 2) {
    // a path vertex is removable iff it has no chord to the outer cycle
    int pick = -1;
    for (int i = 1; i + 1 < static_cast<int>(path.size()); ++i) {
      Vertex v = path[i];
      bool chord = false;
      for (Vertex w : h.neighbors(v))
        if (alive[w] && on_path[w] && w != path[i - 1] && w != path[i + 1]) chord = true;
      if (!chord && (pick < 0 || v < path[pick])) pick = i;
    }
    if (pick < 0) throw NotTriangulation("shelling found no removable boundary vertex");
    Vertex v = path[pick], prev = path[pick - 1], next = path[pick + 1];
    // the interior neighbours of v form the arc between prev and next that
    // holds alive vertices
    std::vector<Vertex> cw_arc, ccw_arc;
    for (Vertex w = h.next_cw(v, prev); w != next; w = h.next_cw(v, w)) cw_arc.push_back(w);
    for (Vertex w = h.prev_cw(v, prev); w != next; w = h.prev_cw(v, w)) ccw_arc.push_back(w);
    auto has_alive = [&](const std::vector<Vertex>& a) {
      return std::any_of(a.begin(), a.end(), [&](Vertex w) { return alive[w]; });
    };
    const auto& arc = has_alive(cw_arc) ? cw_arc : ccw_arc;
    std::vector<Vertex> inner;
    for (Vertex w : arc)
      if (alive[w]) inner.push_back(w);
    alive[v] = 0;
    on_path[v] = 0;
    removed.push_back(v);
    path.erase(path.begin() + pick);
    path.insert(path.begin() + pick, inner.begin(), inner.end());
    for (Vertex w : inner) on_path[w] = 1;
  }
  CanonicalOrder co{{v1, v2}};
  co.order.insert(co.order.end(), removed.rbegin(), removed.rend());
  return co;
}

SchnyderRealizer realizer_from_canonical_order(const PlaneGraph& h, const CanonicalOrder& co) {
  const int n = h.num_vertices();
  if (static_cast<int>(co.order.size()) != n) throw InvalidOrder("order is not a permutation");
  SchnyderRealizer r;
  r.host = h;
  r.outer = {co.order[0], co.order[1], co.order[n - 1]};
  r.color.assign(h.num_edges(), Color::None);
  r.tail.assign(h.num_edges(), -1);
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (co.order[i] < 0 || co.order[i] >= n || pos[co.order[i]] >= 0)
      throw InvalidOrder("order is not a permutation");
    pos[co.order[i]] = i;
  }
  if (!h.adjacent(co.order[0], co.order[1])) throw InvalidOrder("base edge missing");

  auto set = [&](Vertex from, Vertex to, Color c) {
    int e = h.edge_index(from, to);
    r.color[e] = c;
    r.tail[e] = from;
  };
  std::vector<Vertex> path{co.order[0], co.order[1]};
  for (int k = 2; k < n; ++k) {
    Vertex v = co.order[k];
    int l = -1, rr = -1, count = 0;
    for (int i = 0; i < static_cast<int>(path.size()); ++i)
      if (h.adjacent(v, path[i])) {
        if (l < 0) l = i;
        rr = i;
        ++count;
      }
    int earlier = 0;
    for (Vertex w : h.neighbors(v)) earlier += pos[w] < k;
    if (count < 2 || count != rr - l + 1 || earlier != count)
      throw InvalidOrder("earlier neighbours of " + vname(v) + " are not a boundary subpath");
    if (k < n - 1) {
      set(v, path[l], Color::Red);
      set(v, path[rr], Color::Blue);
    }
    for (int i = l + 1; i < rr; ++i) set(path[i], v, Color::Green);
    path.erase(path.begin() + l + 1, path.begin() + rr);
    path.insert(path.begin() + l + 1, v);
  }
  return r;
}

SchnyderRealizer compute_realizer(const PlaneGraph& h, std::array<Vertex, 3> outer) {
  auto r = realizer_from_canonical_order(h, shelling_order(h, outer));
  auto rep = validate_realizer(r);
  if (!rep.ok()) throw NotTriangulation("computed realizer failed validation: " + rep.summary());
  return r;
}

Report validate_realizer(const SchnyderRealizer& r) {
  Report rep;
  const auto& h = r.host;
  const int n = h.num_vertices();
  const auto [v1, v2, vn] = r.outer;
  try {
    require_triangulation(h, r.outer);
  } catch (const Error& e) {
    rep.fail(e.what());
    return rep;
  }
  if (static_cast<int>(r.color.size()) != h.num_edges() || static_cast<int>(r.tail.size()) != h.num_edges()) {
    rep.fail("colour/tail arrays do not match the edge count");
    return rep;
  }
  auto outer_edge = [&](const Edge& e) { return r.is_outer(e.u) && r.is_outer(e.v); };
  for (int i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edges()[i];
    if (outer_edge(e)) {
      if (r.color[i] != Color::None) rep.fail("outer edge " + vname(e.u) + "-" + vname(e.v) + " is coloured");
    } else if (r.color[i] == Color::None || (r.tail[i] != e.u && r.tail[i] != e.v)) {
      rep.fail("inner edge " + vname(e.u) + "-" + vname(e.v) + " lacks colour or orientation");
    }
  }
  if (!rep.ok()) return rep;

  // rule (ii): edges at outer vertices are incoming with the vertex's colour
  const std::array<Color, 3> own{Color::Red, Color::Blue, Color::Green};
  for (int k = 0; k < 3; ++k) {
    Vertex o = r.outer[k];
    for (Vertex w : h.neighbors(o)) {
      int e = h.edge_index(o, w);
      if (outer_edge(h.edges()[e])) continue;
      if (r.tail[e] == o || r.color[e] != own[k])
        rep.fail("edge " + vname(w) + "-" + vname(o) + " at outer vertex " + vname(o) +
                 " must be incoming " + color_name(own[k]));
    }
  }

  // rule (i): clockwise OR, IG*, OB, IR*, OG, IB*
  enum Code { OR, OB, OG, IR, IB, IG };
  for (Vertex v = 0; v < n; ++v) {
    if (r.is_outer(v)) continue;
    std::vector<Code> seq;
    for (Vertex w : h.neighbors(v)) {
      int e = h.edge_index(v, w);
      bool out = r.tail[e] == v;
      switch (r.color[e]) {
        case Color::Red: seq.push_back(out ? OR : IR); break;
        case Color::Blue: seq.push_back(out ? OB : IB); break;
        default: seq.push_back(out ? OG : IG); break;
      }
    }
    auto count = [&](Code c) { return std::count(seq.begin(), seq.end(), c); };
    if (count(OR) != 1 || count(OB) != 1 || count(OG) != 1) {
      rep.fail("vertex " + vname(v) + " does not have exactly one outgoing edge per colour");
      continue;
    }
    auto start = std::find(seq.begin(), seq.end(), OR);
    std::rotate(seq.begin(), start, seq.end());
    const Code pattern[] = {OR, IG, OB, IR, OG, IB};
    std::size_t i = 0;
    bool good = true;
    for (int p = 0; p < 6 && good; p += 2) {
      if (i >= seq.size() || seq[i] != pattern[p]) good = false;
      ++i;
      while (i < seq.size() && seq[i] == pattern[p + 1]) ++i;
    }
    if (!good || i != seq.size())
      rep.fail("clockwise colour pattern violated at vertex " + vname(v));
  }
  if (!rep.ok()) return rep;

  // each colour class is a tree into its outer vertex
  for (int k = 0; k < 3; ++k) {
    auto par = r.parents(own[k]);
    for (Vertex v = 0; v < n; ++v) {
      if (r.is_outer(v)) continue;
      Vertex x = v;
      int steps = 0;
      while (!r.is_outer(x) && steps <= n) {
        x = par[x];
        ++steps;
      }
      if (x != r.outer[k]) {
        rep.fail(std::string(color_name(own[k])) + " path from " + vname(v) + " does not reach " +
                 vname(r.outer[k]));
        break;
      }
    }
  }

  // S1 u S2 u Sn^-1 acyclic: arcs parent -> child for red/blue, child -> parent for green
  std::vector<std::vector<Vertex>> out(n);
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < h.num_edges(); ++i) {
    if (r.color[i] == Color::None) continue;
    const auto& e = h.edges()[i];
    Vertex t = r.tail[i], hd = t == e.u ? e.v : e.u;
    if (r.color[i] == Color::Green) std::swap(t, hd);
    out[hd].push_back(t);
    ++indeg[t];
  }
  std::vector<Vertex> q;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push_back(v);
  std::size_t seen = 0;
  while (seen < q.size()) {
    Vertex v = q[seen++];
    for (Vertex w : out[v])
      if (--indeg[w] == 0) q.push_back(w);
  }
  if (static_cast<int>(seen) != n) {
    Vertex witness = -1;
    for (Vertex v = 0; v < n && witness < 0; ++v)
      if (indeg[v] > 0) witness = v;
    rep.fail("S1 u S2 u Sn^-1 has a directed cycle through vertex " + vname(witness));
  }
  (void)v1;
  (void)v2;
  (void)vn;
  return rep;
}

Report validate_canonical_order(const PlaneGraph& h, const CanonicalOrder& co) {
  Report rep;
  const int n = h.num_vertices();
  const auto& ord = co.order;
  std::vector<int> pos(n, -1);
  if (static_cast<int>(ord.size()) != n) {
    rep.fail("order length differs from vertex count");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (ord[i] < 0 || ord[i] >= n || pos[ord[i]] >= 0) {
      rep.fail("order is not a permutation");
      return rep;
    }
    pos[ord[i]] = i;
  }
  if (n < 2 || !h.adjacent(ord[0], ord[1])) {
    rep.fail("base edge missing");
    return rep;
  }
  std::vector<char> alive(n, 0);
  alive[ord[0]] = alive[ord[1]] = 1;
  std::vector<Vertex> path{ord[0], ord[1]};
  for (int k = 2; k < n; ++k) {
    Vertex v = ord[k];
    int l = -1, r = -1, count = 0, earlier = 0;
    for (int i = 0; i < static_cast<int>(path.size()); ++i)
      if (h.adjacent(v, path[i])) {
        if (l < 0) l = i;
        r = i;
        ++count;
      }
    for (Vertex w : h.neighbors(v)) earlier += pos[w] < k;
    bool reading_a = count >= 2 && count == r - l + 1 && earlier == count;
    alive[v] = 1;
    if (!is_biconnected(h, alive)) rep.fail("prefix ending at " + vname(v) + " is not biconnected");
    if (reading_a) {
      path.erase(path.begin() + l + 1, path.begin() + r);
      path.insert(path.begin() + l + 1, v);
    }
    bool reading_b = false;
    if (h.embedded()) {
      // outer face of G_k from the embedding: v1, v2, then the path backwards
      auto face = face_alive(h, ord[0], ord[1], alive);
      std::vector<Vertex> expect{ord[0]};
      expect.insert(expect.end(), path.rbegin(), path.rend() - 1);
      reading_b = reading_a && same_cycle(face, expect);
      if (reading_a != reading_b && reading_a)
        rep.fail("boundary readings disagree at " + vname(v));
    }
    if (!reading_a) {
      rep.fail("earlier neighbours of " + vname(v) + " are not a subpath of the boundary");
      return rep;
    }
  }
  return rep;
}

CanonicalOrder canonical_order_from_realizer(const SchnyderRealizer& r) {
  const int n = r.n();
  const auto& h = r.host;
  // arc a -> b means a must precede b
  std::vector<std::vector<Vertex>> out(n);
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < h.num_edges(); ++i) {
    if (r.color[i] == Color::None) continue;
    const auto& e = h.edges()[i];
    Vertex t = r.tail[i], hd = t == e.u ? e.v : e.u;
    if (r.color[i] == Color::Green)
      out[t].push_back(hd);
    else
      out[hd].push_back(t);
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : out[v]) ++indeg[w];
  // v1 and v2 lead; vn closes
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  CanonicalOrder co{{r.outer[0], r.outer[1]}};
  std::vector<char> done(n, 0);
  done[r.outer[0]] = done[r.outer[1]] = 1;
  for (Vertex s : {r.outer[0], r.outer[1]})
    for (Vertex w : out[s]) --indeg[w];
  for (Vertex v = 0; v < n; ++v)
    if (!done[v] && indeg[v] == 0 && v != r.outer[2]) ready.push(v);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    co.order.push_back(v);
    done[v] = 1;
    for (Vertex w : out[v])
      if (--indeg[w] == 0 && w != r.outer[2]) ready.push(w);
  }
  co.order.push_back(r.outer[2]);
  if (static_cast<int>(co.order.size()) != n) throw InvalidOrder("realizer is cyclic");
  auto rep = validate_canonical_order(h, co);
  if (!rep.ok()) throw InvalidOrder(rep.summary());
  return co;
}

bool is_topological_for(const SchnyderRealizer& r, const CanonicalOrder& co) {
  const int n = r.n();
  if (static_cast<int>(co.order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[co.order[i]] = i;
  for (int i = 0; i < r.host.num_edges(); ++i) {
    if (r.color[i] == Color::None) continue;
    const auto& e = r.host.edges()[i];
    Vertex t = r.tail[i], hd = t == e.u ? e.v : e.u;
    bool ok = r.color[i] == Color::Green ? pos[t] < pos[hd] : pos[hd] < pos[t];
    if (!ok) return false;
  }
  return true;
}

SchnyderRealizer realizer_from_orientation(const PlaneGraph& h, std::array<Vertex, 3> outer,
                                           std::vector<Vertex> tail) {
  require_triangulation(h, outer);
  const int n = h.num_vertices();
  SchnyderRealizer r;
  r.host = h;
  r.outer = outer;
  r.tail = std::move(tail);
  r.color.assign(h.num_edges(), Color::None);
  // out-colours at v in clockwise order are red, blue, green
  std::vector<std::array<Vertex, 3>> outs(n);
  std::vector<char> assigned(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (r.is_outer(v)) continue;
    int k = 0;
    for (Vertex w : h.neighbors(v)) {
      int e = h.edge_index(v, w);
      if (r.tail[e] == v) {
        if (k == 3) throw NotTriangulation("out-degree above 3 at " + vname(v));
        outs[v][k++] = w;
      }
    }
    if (k != 3) throw NotTriangulation("out-degree below 3 at " + vname(v));
  }
  const std::array<Color, 3> cyc{Color::Red, Color::Blue, Color::Green};
  std::deque<Vertex> queue;
  auto assign = [&](Vertex t, Vertex head, Color c) {
    int slot = static_cast<int>(std::find(outs[t].begin(), outs[t].end(), head) - outs[t].begin());
    int ci = static_cast<int>(std::find(cyc.begin(), cyc.end(), c) - cyc.begin());
    if (assigned[t]) {
      if (r.color[h.edge_index(t, head)] != c) throw NotTriangulation("inconsistent colours at " + vname(t));
      return;
    }
    assigned[t] = 1;
    for (int j = 0; j < 3; ++j) r.color[h.edge_index(t, outs[t][(slot + j) % 3])] = cyc[(ci + j) % 3];
    queue.push_back(t);
  };
  for (int k = 0; k < 3; ++k)
    for (Vertex w : h.neighbors(outer[k]))
      if (!r.is_outer(w)) assign(w, outer[k], cyc[k]);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    // walking clockwise, an incoming edge takes the colour "previous out + 1"
    int start = 0;
    while (r.tail[h.edge_index(v, h.neighbors(v)[start])] != v) ++start;
    Color last = r.color[h.edge_index(v, h.neighbors(v)[start])];
    for (int j = 1; j < h.degree(v); ++j) {
      Vertex w = h.neighbors(v)[(start + j) % h.degree(v)];
      int e = h.edge_index(v, w);
      if (r.tail[e] == v) {
        last = r.color[e];
        continue;
      }
      // OR, IG*, OB, IR*, OG, IB*
      Color in = last == Color::Red ? Color::Green : last == Color::Blue ? Color::Red : Color::Blue;
      if (r.is_outer(w)) throw NotTriangulation("outer vertex " + vname(w) + " has an out-edge");
      assign(w, v, in);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!r.is_outer(v) && !assigned[v]) throw NotTriangulation("vertex " + vname(v) + " unreachable");
  return r;
}

GreenDeletion delete_green(const SchnyderRealizer& r) {
  const auto& h = r.host;
  const int n = h.num_vertices();
  GreenDeletion d;
  d.from_host.assign(n, -1);
  for (Vertex v = 0; v < n; ++v)
    if (v != r.outer[2]) {
      d.from_host[v] = static_cast<Vertex>(d.to_host.size());
      d.to_host.push_back(v);
    }
  std::vector<Edge> es;
  for (int i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edges()[i];
    if (r.color[i] == Color::Green || e.u == r.outer[2] || e.v == r.outer[2]) continue;
    es.push_back({d.from_host[e.u], d.from_host[e.v]});
  }
  d.graph = PlaneGraph(static_cast<int>(d.to_host.size()), std::move(es));
  std::vector<std::vector<Vertex>> rot(d.to_host.size());
  for (Vertex i = 0; i < static_cast<Vertex>(d.to_host.size()); ++i)
    for (Vertex w : h.neighbors(d.to_host[i]))
      if (w != r.outer[2] && r.color[h.edge_index(d.to_host[i], w)] != Color::Green)
        rot[i].push_back(d.from_host[w]);
  d.v1 = d.from_host[r.outer[0]];
  d.v2 = d.from_host[r.outer[1]];
  d.graph.set_embedding(std::move(rot));
  d.graph.set_embedding(
      [&] {
        std::vector<std::vector<Vertex>> rr(d.graph.num_vertices());
        for (Vertex v = 0; v < d.graph.num_vertices(); ++v) rr[v] = d.graph.neighbors(v);
        return rr;
      }(),
      d.graph.face_from_dart(d.v1, d.v2));
  if (!h.labels.empty())
    for (Vertex v : d.to_host) d.graph.labels.push_back(h.labels[v]);
  return d;
}

std::uint64_t realizer_hash(const SchnyderRealizer& r) {
  std::uint64_t x = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t b) {
    x ^= b;
    x *= 1099511628211ULL;
  };
  for (std::size_t i = 0; i < r.color.size(); ++i) {
    mix(static_cast<std::uint64_t>(r.color[i]));
    mix(static_cast<std::uint64_t>(r.tail[i] + 1));
  }
  return x;
}

}  // namespace lgraph
