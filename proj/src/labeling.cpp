#include "lgraph/labeling.hpp"

#include <algorithm>
#include <string>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

// Boundary-path simulation shared by the validator and attachments().
Report simulate(const PlaneGraph& g, const TwoCanonicalOrder& o, Attachment* att) {
  Report rep;
  const int n = g.num_vertices();
  const auto& ord = o.order;
  if (static_cast<int>(ord.size()) != n || n < 2) {
    rep.fail("order length differs from vertex count");
    return rep;
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (ord[i] < 0 || ord[i] >= n || pos[ord[i]] >= 0) {
      rep.fail("order is not a permutation");
      return rep;
    }
    pos[ord[i]] = i;
  }
  if (!g.adjacent(ord[0], ord[1])) {
    rep.fail("base edge " + vname(ord[0]) + "-" + vname(ord[1]) + " missing");
    return rep;
  }
  if (att) {
    att->first.assign(n, -1);
    att->second.assign(n, -1);
  }
  std::vector<char> alive(n, 0);
  alive[ord[0]] = alive[ord[1]] = 1;
  std::vector<Vertex> path{ord[0], ord[1]};
  for (int k = 2; k < n; ++k) {
    Vertex v = ord[k];
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbors(v))
      if (pos[w] < k) earlier.push_back(w);
    if (earlier.size() != 2) {
      rep.fail("vertex " + vname(v) + " has " + std::to_string(earlier.size()) +
               " earlier neighbours, expected 2");
      return rep;
    }
    auto a = std::find(path.begin(), path.end(), earlier[0]);
    auto b = std::find(path.begin(), path.end(), earlier[1]);
    if (a == path.end() || b == path.end()) {
      Vertex off = a == path.end() ? earlier[0] : earlier[1];
      rep.fail("earlier neighbour " + vname(off) + " of " + vname(v) + " is not on the boundary");
      return rep;
    }
    if (b < a) std::swap(a, b);
    for (auto it = a + 1; it != b; ++it)
      for (Vertex w : g.neighbors(*it))
        if (pos[w] > k)
          rep.fail("vertex " + vname(*it) + " is covered by " + vname(v) + " but has later neighbour " +
                   vname(w));
    if (att) {
      att->first[v] = *a;
      att->second[v] = *b;
    }
    auto ins = path.erase(a + 1, b);
    path.insert(ins, v);
    alive[v] = 1;
    if (!is_biconnected(g, alive)) rep.fail("prefix ending at " + vname(v) + " is not biconnected");
  }
  return rep;
}

}  // namespace

std::vector<Vertex> EdgeLabeling::parents(Color c) const {
  std::vector<Vertex> par(n(), -1);
  for (int i = 0; i < host.num_edges(); ++i) {
    if (color[i] != c) continue;
    const auto& e = host.edges()[i];
    par[tail[i]] = tail[i] == e.u ? e.v : e.u;
  }
  return par;
}

EdgeLabeling labeling_from_realizer(const SchnyderRealizer& r) {
  return labeling_from_realizer(r, delete_green(r));
}

EdgeLabeling labeling_from_realizer(const SchnyderRealizer& r, const GreenDeletion& d) {
  EdgeLabeling el;
  el.host = d.graph;
  el.v1 = d.v1;
  el.v2 = d.v2;
  el.color.assign(el.host.num_edges(), Color::None);
  el.tail.assign(el.host.num_edges(), -1);
  for (int i = 0; i < el.host.num_edges(); ++i) {
    const auto& e = el.host.edges()[i];
    int he = r.host.edge_index(d.to_host[e.u], d.to_host[e.v]);
    el.color[i] = r.color[he];
    el.tail[i] = r.tail[he] < 0 ? -1 : d.from_host[r.tail[he]];
  }
  return el;
}

Report validate_labeling(const EdgeLabeling& el) {
  Report rep;
  const auto& g = el.host;
  const int n = g.num_vertices();
  if (!g.embedded()) {
    rep.fail("labeling host carries no embedding");
    return rep;
  }
  if (static_cast<int>(el.color.size()) != g.num_edges() || static_cast<int>(el.tail.size()) != g.num_edges()) {
    rep.fail("colour/tail arrays do not match the edge count");
    return rep;
  }
  int base = g.edge_index(el.v1, el.v2);
  if (base < 0) {
    rep.fail("base edge missing");
    return rep;
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    if (i == base) {
      if (el.color[i] != Color::None) rep.fail("base edge is coloured");
    } else if ((el.color[i] != Color::Red && el.color[i] != Color::Blue) ||
               (el.tail[i] != e.u && el.tail[i] != e.v)) {
      rep.fail("edge " + vname(e.u) + "-" + vname(e.v) + " lacks a red/blue orientation");
    }
  }
  if (!rep.ok()) return rep;

  // (ii)
  for (auto [o, c] : {std::pair{el.v1, Color::Red}, std::pair{el.v2, Color::Blue}})
    for (Vertex w : g.neighbors(o)) {
      int e = g.edge_index(o, w);
      if (e == base) continue;
      if (el.tail[e] == o || el.color[e] != c)
        rep.fail("edge " + vname(w) + "-" + vname(o) + " must be incoming " + color_name(c) + " at " +
                 vname(o));
    }

  // (i): clockwise OR, OB, IR*, IB*
  enum Code { OR, OB, IR, IB };
  for (Vertex v = 0; v < n; ++v) {
    if (v == el.v1 || v == el.v2) continue;
    std::vector<Code> seq;
    for (Vertex w : g.neighbors(v)) {
      int e = g.edge_index(v, w);
      bool out = el.tail[e] == v;
      if (el.color[e] == Color::Red)
        seq.push_back(out ? OR : IR);
      else
        seq.push_back(out ? OB : IB);
    }
    if (std::count(seq.begin(), seq.end(), OR) != 1 || std::count(seq.begin(), seq.end(), OB) != 1) {
      rep.fail("vertex " + vname(v) + " needs exactly one outgoing red and one outgoing blue edge");
      continue;
    }
    std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), OR), seq.end());
    std::size_t i = 2;
    bool good = seq[1] == OB;
    while (i < seq.size() && seq[i] == IR) ++i;
    while (i < seq.size() && seq[i] == IB) ++i;
    if (!good || i != seq.size()) rep.fail("clockwise labeling pattern violated at vertex " + vname(v));
  }

  // (iii): arcs head -> tail for red, tail -> head for blue
  std::vector<std::vector<Vertex>> out(n);
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    if (i == base) continue;
    const auto& e = g.edges()[i];
    Vertex t = el.tail[i], h = t == e.u ? e.v : e.u;
    if (el.color[i] == Color::Red) std::swap(t, h);
    out[t].push_back(h);
    ++indeg[h];
  }
  std::vector<Vertex> q;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push_back(v);
  for (std::size_t s = 0; s < q.size(); ++s)
    for (Vertex w : out[q[s]])
      if (--indeg[w] == 0) q.push_back(w);
  if (static_cast<int>(q.size()) != n) {
    Vertex witness = static_cast<Vertex>(std::find_if(indeg.begin(), indeg.end(), [](int d) { return d > 0; }) -
                                         indeg.begin());
    rep.fail("reversing the red edges leaves a directed cycle through vertex " + vname(witness));
  }
  return rep;
}

TwoCanonicalOrder two_canonical_from_labeling(const EdgeLabeling& el) {
  const auto& g = el.host;
  const int n = g.num_vertices();
  std::vector<char> alive(n, 1);
  auto red = el.parents(Color::Red), blue = el.parents(Color::Blue);
  std::vector<Vertex> peeled;

  for (int step = 0; step < n - 2; ++step) {
    // outer face of the remaining graph: v1, v2, then the path back to v1
    std::vector<Vertex> face;
    for (Vertex a = el.v1, b = el.v2; face.empty() || a != el.v1 || b != el.v2;) {
      face.push_back(a);
      Vertex c = g.next_cw(b, a);
      while (!alive[c]) c = g.next_cw(b, c);
      a = b;
      b = c;
      if (face.size() > static_cast<std::size_t>(2 * n)) throw NoEar("outer face does not close");
    }
    std::vector<Vertex> path{el.v1};
    path.insert(path.end(), face.rbegin(), face.rend() - 2);
    path.push_back(el.v2);

    int pick = -1;
    for (int i = 1; i + 1 < static_cast<int>(path.size()) && pick < 0; ++i) {
      Vertex x = path[i];
      if (red[x] != path[i - 1] || blue[x] != path[i + 1]) continue;
      bool incoming = false;
      for (Vertex w : g.neighbors(x))
        if (alive[w] && el.tail[g.edge_index(x, w)] == w) incoming = true;
      if (!incoming) pick = i;
    }
    if (pick < 0) throw NoEar("no removable vertex on the outer path after " + std::to_string(step) + " peels");
    Vertex x = path[pick];

    // the red path to v1 and the blue path to v2 share only x
    std::vector<char> on_red(n, 0);
    for (Vertex y = red[x]; y >= 0 && !on_red[y]; y = red[y]) on_red[y] = 1;
    if (!on_red[el.v1]) throw NoEar("red path from " + vname(x) + " misses v1");
    bool reached = false;
    for (Vertex y = blue[x], guard = 0; y >= 0 && guard <= n; y = blue[y], ++guard) {
      if (on_red[y]) throw NoEar("red and blue paths from " + vname(x) + " meet at " + vname(y));
      if (y == el.v2) reached = true;
    }
    if (!reached) throw NoEar("blue path from " + vname(x) + " misses v2");

    alive[x] = 0;
    peeled.push_back(x);
  }
  TwoCanonicalOrder o{{el.v1, el.v2}};
  o.order.insert(o.order.end(), peeled.rbegin(), peeled.rend());
  auto rep = validate_two_canonical(g, o);
  if (!rep.ok()) throw NoEar("peeling produced an invalid order: " + rep.summary());
  return o;
}

Report validate_two_canonical(const PlaneGraph& g, const TwoCanonicalOrder& o) {
  return simulate(g, o, nullptr);
}

Attachment attachments(const PlaneGraph& g, const TwoCanonicalOrder& o) {
  Attachment att;
  auto rep = simulate(g, o, &att);
  if (!rep.ok()) throw InvalidOrder(rep.summary());
  return att;
}

}  // namespace lgraph
