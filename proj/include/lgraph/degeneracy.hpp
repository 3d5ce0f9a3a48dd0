#pragma once

#include <optional>
#include <vector>

#include "lgraph/plane_graph.hpp"

namespace lgraph {

struct DegeneracyOrder {
  std::vector<Vertex> order;
  int k = 0;
  /// Every vertex has exactly min(i, k) earlier neighbours (0-based i).
  bool maximal = false;
};

/// Min-degree peeling with a bucket queue; the reverse peeling sequence is the
/// order. Absent if some peeled vertex has degree > k.
std::optional<DegeneracyOrder> degeneracy_order(const PlaneGraph& g, int k);

/// Direct recount of the order invariant; independent of the peeling.
bool check_degeneracy_order(const PlaneGraph& g, const DegeneracyOrder& d);

}  // namespace lgraph
