#include "lgraph/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

void insert_after(std::vector<Vertex>& rot, Vertex anchor, Vertex v) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it + 1, v);
}

void insert_before(std::vector<Vertex>& rot, Vertex anchor, Vertex v) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it, v);
}

}  // namespace

PlaneGraph random_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw MalformedInput("triangulation needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{{0, 1}};
  std::vector<std::vector<Vertex>> rot(n);
  rot[0] = {1};
  rot[1] = {0};
  // boundary path from 0 to 1; new vertices go on the side away from edge 0-1
  std::vector<Vertex> path{0, 1};
  for (Vertex v = 2; v < n; ++v) {
    int m = static_cast<int>(path.size());
    int l = 0, r = m - 1;
    if (v != n - 1) {
      l = std::uniform_int_distribution<int>(0, m - 2)(rng);
      r = std::uniform_int_distribution<int>(l + 1, m - 1)(rng);
    }
    for (int i = l; i <= r; ++i) {
      Vertex c = path[i];
      edges.push_back({c, v});
      if (i < r)
        insert_before(rot[c], path[i + 1], v);
      else
        insert_after(rot[c], path[i - 1], v);
      rot[v].insert(rot[v].begin(), c);
    }
    path.erase(path.begin() + l + 1, path.begin() + r);
    path.insert(path.begin() + l + 1, v);
  }
  PlaneGraph g(n, std::move(edges));
  g.set_embedding(std::move(rot), {0, 1, n - 1});
  return g;
}

PlaneGraph random_planar_3tree(int n, std::uint64_t seed) {
  if (n < 3) throw MalformedInput("3-tree needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::vector<Vertex>> rot{{1, 2}, {2, 0}, {0, 1}};
  std::vector<std::array<Vertex, 3>> inner{{0, 2, 1}};
  for (Vertex v = 3; v < n; ++v) {
    auto pick = std::uniform_int_distribution<std::size_t>(0, inner.size() - 1)(rng);
    auto [a, b, c] = inner[pick];
    insert_after(rot[b], a, v);
    insert_after(rot[c], b, v);
    insert_after(rot[a], c, v);
    rot.push_back({a, c, b});
    edges.push_back({a, v});
    edges.push_back({b, v});
    edges.push_back({c, v});
    inner[pick] = {a, b, v};
    inner.push_back({b, c, v});
    inner.push_back({c, a, v});
  }
  PlaneGraph g(n, std::move(edges));
  g.set_embedding(std::move(rot), {0, 1, 2});
  return g;
}

PlaneGraph random_stacking(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n >= 2) edges.push_back({0, 1});
  for (Vertex v = 2; v < n; ++v) {
    Vertex a = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    Vertex b = std::uniform_int_distribution<Vertex>(0, v - 2)(rng);
    if (b >= a) ++b;
    edges.push_back({a, v});
    edges.push_back({b, v});
  }
  return PlaneGraph(n, std::move(edges));
}

PlaneGraph relabel(const PlaneGraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> es;
  for (const auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  return PlaneGraph(g.num_vertices(), std::move(es));
}

std::vector<std::uint8_t> canonical_form(const PlaneGraph& g) {
  const int n = g.num_vertices();
  // colour refinement by (degree, sorted neighbour degrees)
  std::vector<std::vector<int>> key(n);
  for (Vertex v = 0; v < n; ++v) {
    key[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    key[v].insert(key[v].end(), nd.begin(), nd.end());
  }
  std::map<std::vector<int>, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v) classes[key[v]].push_back(v);
  std::vector<std::vector<Vertex>> cls;
  for (auto& [k, vs] : classes) cls.push_back(vs);

  std::vector<std::uint8_t> best;
  std::vector<Vertex> seq;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cls.size()) {
      std::vector<std::uint8_t> s{static_cast<std::uint8_t>(n)};
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.push_back(g.adjacent(seq[i], seq[j]) ? 1 : 0);
      if (s > best) best = std::move(s);
      return;
    }
    auto vs = cls[c];
    std::sort(vs.begin(), vs.end());
    do {
      seq.insert(seq.end(), vs.begin(), vs.end());
      rec(c + 1);
      seq.resize(seq.size() - vs.size());
    } while (std::next_permutation(vs.begin(), vs.end()));
  };
  rec(0);
  return best;
}

std::vector<PlaneGraph> all_planar_stackings(int max_n) {
  std::vector<PlaneGraph> out;
  std::vector<PlaneGraph> level{PlaneGraph(2, {{0, 1}})};
  for (int n = 3; n <= max_n; ++n) {
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<PlaneGraph> next;
    for (const auto& g : level) {
      for (Vertex a = 0; a < n - 1; ++a)
        for (Vertex b = a + 1; b < n - 1; ++b) {
          auto es = g.edges();
          es.push_back({a, n - 1});
          es.push_back({b, n - 1});
          PlaneGraph h(n, std::move(es));
          if (!is_planar(h)) continue;
          if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
        }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace lgraph
