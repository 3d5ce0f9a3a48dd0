#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lgraph/labeling.hpp"
#include "lgraph/plane_graph.hpp"
#include "lgraph/rational.hpp"
#include "lgraph/report.hpp"
#include "lgraph/schnyder.hpp"

namespace lgraph {

/// An L: vertical leg from `top` down to the bend, horizontal leg from the
/// bend right to `right`.
struct LShape {
  Point top;
  Point right;

  Point bend() const { return {top.x, right.y}; }
  Rational vertical() const { return top.y - right.y; }
  Rational horizontal() const { return right.x - top.x; }
  bool equilateral() const { return vertical() == horizontal(); }

  friend bool operator==(const LShape&, const LShape&) = default;
};

struct LRepresentation {
  PlaneGraph host;
  Vertex v1 = 0;
  Vertex v2 = 1;
  std::vector<LShape> shapes;  // indexed by vertex
};

/// Where two L's meet.
enum class ContactKind {
  None,
  TopOnHorizontal,  // top endpoint of the first on the horizontal leg of the second
  RightOnVertical,  // right endpoint of the first on the vertical leg of the second
  Degenerate,       // an endpoint meets a bend or another endpoint
  Overlap,          // a common segment of positive length
  Crossing,         // proper crossing or a shared point not involving an endpoint
  Multiple,         // more than one common point
};

struct Contact {
  ContactKind kind = ContactKind::None;
  bool reversed = false;  // the second shape carries the endpoint
  Point where;
};

/// Exact classification of the intersection of two L's.
Contact classify(const LShape& a, const LShape& b);

/// Incremental construction along a 2-canonical order. Each new top endpoint
/// goes to the midpoint of the exposed horizontal segment of the earlier
/// neighbour nearer v1, the right endpoint to the midpoint of the exposed
/// vertical segment of the other one. Output is validated. Throws InvalidOrder.
LRepresentation build_lrep(const PlaneGraph& g, const TwoCanonicalOrder& o);

/// The base shapes: v1 top (1,2) right (4,-1); v2 top (3,-1) right (5,-3).
std::pair<LShape, LShape> base_shapes();

/// Outer staircase traced geometrically from the top of v1 to the right end of
/// v2 over the shapes present in `shapes` (absent entries ignored). Returns
/// the corner chain and the vertices in the order visited, or nullopt if the
/// walk gets stuck.
struct Staircase {
  std::vector<Point> points;
  std::vector<Vertex> vertices;
};
std::optional<Staircase> trace_staircase(const std::vector<std::optional<LShape>>& shapes, Vertex v1, Vertex v2);

/// Pairwise classification, contact graph equal to the host, v1 with the
/// topmost horizontal and v2 with the rightmost vertical leg, and the traced
/// staircase matching the outer face of the contact graph.
/// Runs the pairwise part with OpenMP; validate_lrep_serial is the reference.
Report validate_lrep(const LRepresentation& rep);
Report validate_lrep_serial(const LRepresentation& rep);

/// Top endpoint on a horizontal leg gives a red edge, right endpoint on a
/// vertical leg a blue one; the host carries the geometric rotation. Throws
/// DegenerateRep if some contact is degenerate or not of either kind.
EdgeLabeling induced_labeling(const LRepresentation& rep);

/// Observer called after every insertion of equilateralize with the shapes
/// placed so far and the level c of the line x + y = c.
using EquilateralObserver = std::function<void(const std::vector<std::optional<LShape>>&, const Rational&)>;

/// Rebuilds rep along two_canonical_from_labeling(induced_labeling(rep)) with
/// every shape equilateral, keeping x + y = 1 inside every staircase segment.
LRepresentation equilateralize(const LRepresentation& rep, const EquilateralObserver& observe = {});

/// Level of the line kept by equilateralize for the base shapes.
Rational equilateral_level();

/// Lemma 2 completion: a v_n shape left of L_{v1} and below L_{v2}, and a ray
/// from every bend to the left that ends on the first vertical leg it meets.
/// Ray contacts become green edges. The new vertex is host vertex n.
/// Throws DegenerateRep when a ray meets an endpoint or runs along a
/// horizontal leg.
struct Completion {
  PlaneGraph host;
  SchnyderRealizer realizer;
};
Completion complete_to_triangulation(const LRepresentation& rep);

}  // namespace lgraph
