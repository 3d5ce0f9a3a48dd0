#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lgraph/degeneracy.hpp"
#include "lgraph/labeling.hpp"
#include "lgraph/lrep.hpp"
#include "lgraph/plane_graph.hpp"

namespace lgraph {

/// Predecessors of every vertex when the graph is grown from a base edge.
struct PrecedenceOrientation {
  Vertex v1 = 0;
  Vertex v2 = 1;
  std::vector<std::vector<Vertex>> pred;  // empty for v1, v2
  std::optional<DegeneracyOrder> order_found;
};

/// Marking propagation from (v1, v2): repeatedly mark an unmarked vertex with
/// exactly two marked neighbours; those are its predecessors. Absent when a
/// vertex sees three or more marked neighbours or the propagation stalls.
std::optional<PrecedenceOrientation> precedence_orientation(const PlaneGraph& g, Vertex v1, Vertex v2);

struct Refusal {
  std::string step;    // "precedence", "siblings", "stuck", "validation"
  std::string detail;
};

struct BaseEdgeResult {
  std::optional<TwoCanonicalOrder> order;
  std::optional<LRepresentation> rep;
  Refusal refusal;
  bool ok() const { return order.has_value(); }
};

/// Grows the boundary path from (v1, v2). A vertex is admissible once its two
/// predecessors are on the path and everything between them is finished.
/// Admissible vertices with the same predecessors {x, y} must lie in distinct
/// components of G - {x, y}; the one whose component reaches the rest of the
/// graph is placed last. The result is checked by building and validating an
/// L-representation.
BaseEdgeResult test_base_edge(const PlaneGraph& g, Vertex v1, Vertex v2);

struct Recognition {
  bool lgraph = false;
  Vertex v1 = -1;
  Vertex v2 = -1;
  std::optional<TwoCanonicalOrder> order;
  std::optional<LRepresentation> rep;
  std::string reason;  // why not, when lgraph is false
};

/// Planarity and maximal 2-degeneracy filters, then test_base_edge over both
/// orientations of every edge. The first success by (edge index, orientation)
/// wins; the trials run with OpenMP, recognize_serial is the reference.
Recognition recognize(const PlaneGraph& g);
Recognition recognize_serial(const PlaneGraph& g);

inline constexpr int kOracleMaxVertices = 12;

/// Every 2-canonical order starting v1, v2, by exhaustive insertion with the
/// boundary-path rules, stopping after `limit` orders. Throws TooLarge above
/// kOracleMaxVertices.
std::vector<TwoCanonicalOrder> oracle_two_canonical(const PlaneGraph& g, Vertex v1, Vertex v2,
                                                    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Existence only, with memoization of dead states.
bool oracle_has_two_canonical(const PlaneGraph& g, Vertex v1, Vertex v2);

}  // namespace lgraph
