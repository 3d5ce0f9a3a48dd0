#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lgraph/plane_graph.hpp"
#include "lgraph/report.hpp"

namespace lgraph {

enum class Color : std::uint8_t { None, Red, Blue, Green };

const char* color_name(Color c);

/// Orientation and 3-colouring of the inner edges of an embedded maximally
/// planar graph. Colour i edges point towards outer vertex v_i.
struct SchnyderRealizer {
  PlaneGraph host;
  std::array<Vertex, 3> outer{};  // v1, v2, vn in clockwise order
  std::vector<Color> color;       // per edge index; None on the outer triangle
  std::vector<Vertex> tail;       // per edge index; -1 on the outer triangle

  int n() const { return host.num_vertices(); }
  /// Index of the dummy vertex v_{n+1}.
  Vertex dummy() const { return n(); }
  bool is_outer(Vertex v) const { return v == outer[0] || v == outer[1] || v == outer[2]; }

  /// sigma_c(v): the out-neighbour of v in colour c, or -1. For Green the
  /// outer vertices map to dummy().
  std::vector<Vertex> parents(Color c) const;
};

/// Vertex order (v1, v2, ..., vn) with base edge (order[0], order[1]).
struct CanonicalOrder {
  std::vector<Vertex> order;
};

/// Canonical order by reverse shelling from vn; ties among removable boundary
/// vertices broken by lowest id. Then coloured by realizer_from_canonical_order.
SchnyderRealizer compute_realizer(const PlaneGraph& h, std::array<Vertex, 3> outer);

/// The shelling order on its own.
CanonicalOrder shelling_order(const PlaneGraph& h, std::array<Vertex, 3> outer);

Report validate_realizer(const SchnyderRealizer& r);

/// Checks both readings of the boundary condition: the simulated boundary
/// path (earlier neighbours contiguous on C_{i-1}) and the outer face of the
/// embedded prefix G_i equal to C_{i-1} with the covered part replaced.
/// Prefix biconnectivity is checked by an explicit cut-vertex search.
Report validate_canonical_order(const PlaneGraph& h, const CanonicalOrder& co);

/// Topological order: each vertex after sigma_1, sigma_2 and before sigma_n.
/// Ties by lowest id. Validated against the canonical-order definition.
CanonicalOrder canonical_order_from_realizer(const SchnyderRealizer& r);

/// True iff every inner v has pos(sigma_1(v)), pos(sigma_2(v)) < pos(v) <
/// pos(sigma_n(v)), checked edge by edge.
bool is_topological_for(const SchnyderRealizer& r, const CanonicalOrder& co);

/// Leftmost earlier neighbour receives the red out-edge, rightmost the blue
/// one, covered boundary vertices send green into the new vertex.
/// Throws InvalidOrder.
SchnyderRealizer realizer_from_canonical_order(const PlaneGraph& h, const CanonicalOrder& co);

/// Rebuilds colours from an orientation with out-degree 3 at inner vertices
/// (tail per edge, -1 on the outer triangle). Throws NotTriangulation when the
/// orientation does not admit a consistent colouring.
SchnyderRealizer realizer_from_orientation(const PlaneGraph& h, std::array<Vertex, 3> outer,
                                           std::vector<Vertex> tail);

/// H minus v_n and the green edges, with base edge v1v2 and inherited
/// embedding. Vertex i of `graph` is host vertex to_host[i].
struct GreenDeletion {
  PlaneGraph graph;
  Vertex v1 = 0;
  Vertex v2 = 1;
  std::vector<Vertex> to_host;
  std::vector<Vertex> from_host;  // -1 for v_n
};

GreenDeletion delete_green(const SchnyderRealizer& r);

/// Stable fingerprint of the colouring, used in iteration traces.
std::uint64_t realizer_hash(const SchnyderRealizer& r);

}  // namespace lgraph
