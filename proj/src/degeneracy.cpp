#include "lgraph/degeneracy.hpp"

#include <algorithm>
#include <list>

namespace lgraph {

std::optional<DegeneracyOrder> degeneracy_order(const PlaneGraph& g, int k) {
  const int n = g.num_vertices();
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));

  // bucket[d] holds vertices of current degree d; pos remembers the list node
  std::vector<std::list<Vertex>> bucket(max_deg + 1);
  std::vector<std::list<Vertex>::iterator> pos(n);
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    bucket[deg[v]].push_front(v);
    pos[v] = bucket[deg[v]].begin();
  }

  std::vector<Vertex> peeled;
  bool maximal = true;
  int lo = 0;
  for (int step = 0; step < n; ++step) {
    lo = std::max(0, lo - 1);
    while (bucket[lo].empty()) ++lo;
    Vertex v = bucket[lo].front();
    bucket[lo].pop_front();
    removed[v] = 1;
    if (deg[v] > k) return std::nullopt;
    int remaining = n - step - 1;
    if (deg[v] != std::min(remaining, k)) maximal = false;
    peeled.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      bucket[deg[w]].erase(pos[w]);
      --deg[w];
      bucket[deg[w]].push_front(w);
      pos[w] = bucket[deg[w]].begin();
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return DegeneracyOrder{std::move(peeled), k, maximal};
}

bool check_degeneracy_order(const PlaneGraph& g, const DegeneracyOrder& d) {
  const int n = g.num_vertices();
  if (static_cast<int>(d.order.size()) != n) return false;
  std::vector<int> at(n, -1);
  for (int i = 0; i < n; ++i) {
    if (d.order[i] < 0 || d.order[i] >= n || at[d.order[i]] >= 0) return false;
    at[d.order[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    int earlier = 0;
    for (Vertex w : g.neighbors(d.order[i])) earlier += at[w] < i;
    if (earlier > d.k) return false;
    if (d.maximal && earlier != std::min(i, d.k)) return false;
  }
  return true;
}

}  // namespace lgraph
