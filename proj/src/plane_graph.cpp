#include "lgraph/plane_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "lgraph/error.hpp"
#include "lgraph/report.hpp"

namespace lgraph {

std::string Report::summary() const {
  if (failures.empty()) return "ok";
  std::ostringstream os;
  os << failures.size() << " failure(s)";
  for (const auto& f : failures) os << "\n  - " << f;
  return os.str();
}

PlaneGraph::PlaneGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw MalformedInput("negative vertex count");
  adj_.assign(n, {});
  for (int i = 0; i < num_edges(); ++i) {
    auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedInput("edge endpoint out of range");
    if (u == v) throw MalformedInput("self-loop at " + std::to_string(u));
    if (!edge_of_.emplace(key(u, v), i).second || !edge_of_.emplace(key(v, u), i).second)
      throw MalformedInput("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
}

int PlaneGraph::edge_index(Vertex u, Vertex v) const {
  auto it = edge_of_.find(key(u, v));
  return it == edge_of_.end() ? -1 : it->second;
}

void PlaneGraph::index_rotation() {
  dart_pos_.clear();
  for (Vertex v = 0; v < n_; ++v)
    for (int i = 0; i < degree(v); ++i) dart_pos_[key(v, adj_[v][i])] = i;
}

int PlaneGraph::rotation_index(Vertex v, Vertex u) const {
  auto it = dart_pos_.find(key(v, u));
  if (it == dart_pos_.end())
    throw Error("no dart " + std::to_string(v) + "->" + std::to_string(u));
  return it->second;
}

Vertex PlaneGraph::next_cw(Vertex v, Vertex u) const {
  const auto& r = adj_[v];
  return r[(rotation_index(v, u) + 1) % r.size()];
}

Vertex PlaneGraph::prev_cw(Vertex v, Vertex u) const {
  const auto& r = adj_[v];
  return r[(rotation_index(v, u) + r.size() - 1) % r.size()];
}

std::vector<Vertex> PlaneGraph::face_from_dart(Vertex u, Vertex v) const {
  std::vector<Vertex> face;
  Vertex a = u, b = v;
  do {
    face.push_back(a);
    Vertex c = next_cw(b, a);
    a = b;
    b = c;
    if (face.size() > 2 * edges_.size() + 1) throw InconsistentRotation("face orbit does not close");
  } while (a != u || b != v);
  return face;
}

std::vector<std::vector<Vertex>> PlaneGraph::faces() const {
  std::vector<std::vector<Vertex>> out;
  std::unordered_map<std::uint64_t, char> seen;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (seen.count(key(u, v))) continue;
      auto f = face_from_dart(u, v);
      for (std::size_t i = 0; i < f.size(); ++i) seen[key(f[i], f[(i + 1) % f.size()])] = 1;
      out.push_back(std::move(f));
    }
  }
  return out;
}

int PlaneGraph::num_components() const {
  auto comp = components_without(*this, {});
  int c = 0;
  for (int x : comp) c = std::max(c, x + 1);
  return c;
}

bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t s = 0; s < b.size(); ++s) {
    if (b[s] != a[0]) continue;
    bool match = true;
    for (std::size_t i = 0; i < a.size() && match; ++i) match = a[i] == b[(s + i) % b.size()];
    if (match) return true;
  }
  return false;
}

void PlaneGraph::set_embedding(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer) {
  if (static_cast<int>(rotation.size()) != n_) throw InconsistentRotation("rotation size mismatch");
  for (Vertex v = 0; v < n_; ++v) {
    auto a = rotation[v], b = adj_[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw InconsistentRotation("rotation at " + std::to_string(v) + " is not its neighbourhood");
  }
  auto old_adj = adj_;
  adj_ = std::move(rotation);
  index_rotation();
  embedded_ = true;

  auto fail = [&](const std::string& why) {
    adj_ = std::move(old_adj);
    embedded_ = false;
    index_rotation();
    throw InconsistentRotation(why);
  };

  if (!edges_.empty()) {
    auto fs = faces();
    int isolated = 0;
    for (Vertex v = 0; v < n_; ++v) isolated += degree(v) == 0;
    // V - E + F = 1 + C for a plane graph with C components (isolated
    // vertices contribute no face of their own).
    int comps = num_components() - isolated;
    int lhs = (n_ - isolated) - num_edges() + static_cast<int>(fs.size());
    if (lhs != 1 + comps) fail("Euler characteristic " + std::to_string(lhs) + " != " + std::to_string(1 + comps));

    if (outer.empty()) {
      outer = face_from_dart(edges_[0].u, edges_[0].v);
    } else {
      bool found = std::any_of(fs.begin(), fs.end(), [&](const auto& f) { return same_cycle(f, outer); });
      if (!found) {
        auto mirrored = adj_;
        for (auto& r : mirrored) std::reverse(r.begin(), r.end());
        adj_ = mirrored;
        index_rotation();
        fs = faces();
        found = std::any_of(fs.begin(), fs.end(), [&](const auto& f) { return same_cycle(f, outer); });
        if (!found) fail("outer face is not a face of the rotation system");
      }
    }
  }
  outer_ = std::move(outer);
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const PlaneGraph& g) {
  BoostGraph bg(g.num_vertices());
  for (int i = 0; i < g.num_edges(); ++i) {
    auto e = boost::add_edge(g.edges()[i].u, g.edges()[i].v, bg).first;
    boost::put(boost::edge_index, bg, e, i);
  }
  return bg;
}

}  // namespace

bool is_planar(const PlaneGraph& g) {
  auto bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

void embed(PlaneGraph& g, std::vector<Vertex> outer) {
  auto bg = to_boost(g);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(g.num_vertices());
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) throw NotPlanar();
  std::vector<std::vector<Vertex>> rotation(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (const auto& e : emb[v]) {
      auto s = static_cast<Vertex>(boost::source(e, bg)), t = static_cast<Vertex>(boost::target(e, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  g.set_embedding(std::move(rotation), std::move(outer));
}

PlaneGraph induced_subgraph(const PlaneGraph& g, const std::vector<Vertex>& keep) {
  std::vector<int> idx(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) idx[keep[i]] = i;
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (idx[e.u] >= 0 && idx[e.v] >= 0) es.push_back({idx[e.u], idx[e.v]});
  PlaneGraph h(static_cast<int>(keep.size()), std::move(es));
  if (!g.labels.empty())
    for (Vertex v : keep) h.labels.push_back(g.labels[v]);
  if (g.embedded()) {
    std::vector<std::vector<Vertex>> rot(keep.size());
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
      for (Vertex w : g.neighbors(keep[i]))
        if (idx[w] >= 0) rot[i].push_back(idx[w]);
    h.set_embedding(std::move(rot));
  }
  return h;
}

std::vector<int> components_without(const PlaneGraph& g, const std::vector<Vertex>& removed) {
  std::vector<int> comp(g.num_vertices(), -2);
  for (Vertex r : removed) comp[r] = -1;
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != -2) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[w] == -2) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

bool is_biconnected(const PlaneGraph& g, const std::vector<char>& mask) {
  std::vector<Vertex> verts;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (mask[v]) verts.push_back(v);
  if (verts.size() < 2) return false;
  std::vector<int> disc(g.num_vertices(), -1), low(g.num_vertices(), 0);
  int timer = 0;
  bool cut = false;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (!mask[w] || w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cut = true;
    }
    if (parent < 0 && children > 1) cut = true;
  };
  dfs(verts[0], -1);
  for (Vertex v : verts)
    if (disc[v] < 0) return false;
  return !cut;
}

}  // namespace lgraph
