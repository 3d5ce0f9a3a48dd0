#include "lgraph/recognition.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

// Insertion of v between its two earlier neighbours a, b on the path. Returns
// false if a neighbour is off the path or a covered vertex is unfinished.
bool try_insert(const PlaneGraph& g, const std::vector<char>& placed, std::vector<Vertex>& path, Vertex v, Vertex a,
                Vertex b) {
  auto ia = std::find(path.begin(), path.end(), a);
  auto ib = std::find(path.begin(), path.end(), b);
  if (ia == path.end() || ib == path.end()) return false;
  if (ib < ia) std::swap(ia, ib);
  for (auto it = ia + 1; it != ib; ++it)
    for (Vertex w : g.neighbors(*it))
      if (!placed[w]) return false;
  path.erase(ia + 1, ib);
  path.insert(std::find(path.begin(), path.end(), *ia) + 1, v);
  return true;
}

std::vector<Vertex> placed_neighbors(const PlaneGraph& g, const std::vector<char>& placed, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (placed[w]) out.push_back(w);
  return out;
}

}  // namespace

std::optional<PrecedenceOrientation> precedence_orientation(const PlaneGraph& g, Vertex v1, Vertex v2) {
  const int n = g.num_vertices();
  if (v1 == v2 || !g.adjacent(v1, v2)) return std::nullopt;
  PrecedenceOrientation po{v1, v2, std::vector<std::vector<Vertex>>(n), std::nullopt};
  std::vector<char> marked(n, 0);
  std::vector<int> count(n, 0);
  std::vector<Vertex> ready, order{v1, v2};
  auto mark = [&](Vertex v) {
    marked[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!marked[w] && ++count[w] == 2) ready.push_back(w);
  };
  mark(v1);
  mark(v2);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    Vertex v = ready.back();
    ready.pop_back();
    if (count[v] != 2) return std::nullopt;  // more than two marked neighbours
    for (Vertex w : g.neighbors(v))
      if (marked[w]) po.pred[v].push_back(w);
    std::sort(po.pred[v].begin(), po.pred[v].end());
    order.push_back(v);
    mark(v);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!marked[v] || count[v] > 2) return std::nullopt;
  po.order_found = DegeneracyOrder{order, 2, true};
  return po;
}

BaseEdgeResult test_base_edge(const PlaneGraph& g, Vertex v1, Vertex v2) {
  BaseEdgeResult res;
  const int n = g.num_vertices();
  auto po = precedence_orientation(g, v1, v2);
  if (!po) {
    res.refusal = {"precedence", "no precedence orientation from " + vname(v1) + "-" + vname(v2)};
    return res;
  }
  std::vector<char> placed(n, 0);
  placed[v1] = placed[v2] = 1;
  std::vector<Vertex> path{v1, v2}, order{v1, v2};

  // unplaced vertices reachable from s without passing placed ones
  auto reach = [&](Vertex s) {
    std::vector<Vertex> seen{s}, stack{s};
    std::vector<char> in(n, 0);
    in[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (!placed[w] && !in[w]) {
          in[w] = 1;
          seen.push_back(w);
          stack.push_back(w);
        }
    }
    return std::pair{seen, in};
  };

  while (static_cast<int>(order.size()) < n) {
    std::vector<Vertex> admissible;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      auto pn = placed_neighbors(g, placed, v);
      if (pn.size() != 2) continue;
      auto trial = path;
      if (try_insert(g, placed, trial, v, pn[0], pn[1])) admissible.push_back(v);
    }
    if (admissible.empty()) {
      res.refusal = {"stuck", "no admissible vertex after " + std::to_string(order.size()) + " placements"};
      return res;
    }
    std::optional<Vertex> pick;
    for (Vertex u : admissible) {
      const auto& xy = po->pred[u];
      std::vector<Vertex> sib;
      for (Vertex w : admissible)
        if (po->pred[w] == xy) sib.push_back(w);
      if (sib.size() == 1) {
        pick = u;
        break;
      }
      // components of G - {x, y} restricted to the unplaced vertices
      std::vector<char> used(n, 0);
      int outside = 0;
      bool u_outside = false;
      for (Vertex s : sib) {
        auto [seen, in] = reach(s);
        bool out = false;
        for (Vertex r : seen) {
          if (used[r]) {
            res.refusal = {"siblings", vname(s) + " and another vertex on " + vname(xy[0]) + "-" + vname(xy[1]) +
                                           " share a component"};
            return res;
          }
          used[r] = 1;
          for (Vertex w : g.neighbors(r))
            if (placed[w] && w != xy[0] && w != xy[1]) out = true;
        }
        outside += out;
        if (s == u) u_outside = out;
      }
      if (outside > 1) {
        res.refusal = {"siblings", "two vertices on " + vname(xy[0]) + "-" + vname(xy[1]) +
                                       " reach the rest of the graph"};
        return res;
      }
      if (!u_outside) {
        pick = u;
        break;
      }
    }
    if (!pick) {
      res.refusal = {"stuck", "only vertices that must come last are admissible"};
      return res;
    }
    auto pn = placed_neighbors(g, placed, *pick);
    try_insert(g, placed, path, *pick, pn[0], pn[1]);
    placed[*pick] = 1;
    order.push_back(*pick);
  }

  TwoCanonicalOrder o{order};
  auto check = validate_two_canonical(g, o);
  if (!check.ok()) {
    res.refusal = {"validation", check.summary()};
    return res;
  }
  try {
    res.rep = build_lrep(g, o);
  } catch (const Error& e) {
    res.refusal = {"validation", e.what()};
    return res;
  }
  res.order = o;
  return res;
}

namespace {

// Cheap filters shared by both recognizers; empty string when they pass.
std::string prefilter(const PlaneGraph& g) {
  if (g.num_vertices() < 2) return "fewer than two vertices";
  if (!is_planar(g)) return "not planar";
  auto d = degeneracy_order(g, 2);
  if (!d || !d->maximal) return "not maximal 2-degenerate";
  return {};
}

Recognition assemble(const PlaneGraph& g, int trial, BaseEdgeResult r) {
  const auto& e = g.edges()[trial / 2];
  Recognition out;
  out.lgraph = true;
  out.v1 = trial % 2 ? e.v : e.u;
  out.v2 = trial % 2 ? e.u : e.v;
  out.order = std::move(r.order);
  out.rep = std::move(r.rep);
  return out;
}

Vertex trial_v1(const PlaneGraph& g, int t) { return t % 2 ? g.edges()[t / 2].v : g.edges()[t / 2].u; }
Vertex trial_v2(const PlaneGraph& g, int t) { return t % 2 ? g.edges()[t / 2].u : g.edges()[t / 2].v; }

}  // namespace

Recognition recognize_serial(const PlaneGraph& g) {
  Recognition out;
  out.reason = prefilter(g);
  if (!out.reason.empty()) return out;
  const int trials = 2 * g.num_edges();
  for (int t = 0; t < trials; ++t) {
    auto r = test_base_edge(g, trial_v1(g, t), trial_v2(g, t));
    if (r.ok()) return assemble(g, t, std::move(r));
  }
  out.reason = "no base edge admits a 2-canonical order";
  return out;
}

Recognition recognize(const PlaneGraph& g) {
  Recognition out;
  out.reason = prefilter(g);
  if (!out.reason.empty()) return out;
  const int trials = 2 * g.num_edges();
  std::vector<std::optional<BaseEdgeResult>> results(trials);
  std::atomic<int> best{trials};
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    if (t > best.load()) continue;
    auto r = test_base_edge(g, trial_v1(g, t), trial_v2(g, t));
    if (!r.ok()) continue;
    results[t] = std::move(r);
    int cur = best.load();
    while (t < cur && !best.compare_exchange_weak(cur, t)) {
    }
  }
  if (best.load() < trials) return assemble(g, best.load(), std::move(*results[best.load()]));
  out.reason = "no base edge admits a 2-canonical order";
  return out;
}

namespace {

struct Oracle {
  const PlaneGraph& g;
  int n;
  std::size_t limit;
  bool exists_only;
  std::vector<char> placed;
  std::vector<Vertex> path, order;
  std::vector<TwoCanonicalOrder> found;
  std::set<std::pair<unsigned, std::vector<Vertex>>> dead;

  // true when the search should stop
  bool run() {
    if (static_cast<int>(order.size()) == n) {
      found.push_back({order});
      return found.size() >= limit;
    }
    unsigned mask = 0;
    for (Vertex v = 0; v < n; ++v)
      if (placed[v]) mask |= 1u << v;
    if (exists_only && dead.count({mask, path})) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      auto pn = placed_neighbors(g, placed, v);
      if (pn.size() != 2) continue;
      auto saved = path;
      if (!try_insert(g, placed, path, v, pn[0], pn[1])) continue;
      placed[v] = 1;
      order.push_back(v);
      bool stop = run();
      order.pop_back();
      placed[v] = 0;
      path = std::move(saved);
      if (stop) return true;
    }
    if (exists_only) dead.insert({mask, path});
    return false;
  }
};

std::vector<TwoCanonicalOrder> search(const PlaneGraph& g, Vertex v1, Vertex v2, std::size_t limit, bool exists_only) {
  const int n = g.num_vertices();
  if (n > kOracleMaxVertices) throw TooLarge(std::to_string(n) + " vertices, oracle limit is " +
                                             std::to_string(kOracleMaxVertices));
  if (v1 == v2 || !g.adjacent(v1, v2) || limit == 0) return {};
  Oracle o{g, n, limit, exists_only, std::vector<char>(n, 0), {v1, v2}, {v1, v2}, {}, {}};
  o.placed[v1] = o.placed[v2] = 1;
  o.run();
  return o.found;
}

}  // namespace

std::vector<TwoCanonicalOrder> oracle_two_canonical(const PlaneGraph& g, Vertex v1, Vertex v2, std::size_t limit) {
  return search(g, v1, v2, limit, false);
}

bool oracle_has_two_canonical(const PlaneGraph& g, Vertex v1, Vertex v2) {
  return !search(g, v1, v2, 1, true).empty();
}

}  // namespace lgraph
