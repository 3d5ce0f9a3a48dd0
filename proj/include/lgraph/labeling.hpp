#pragma once

#include <vector>

#include "lgraph/plane_graph.hpp"
#include "lgraph/report.hpp"
#include "lgraph/schnyder.hpp"

namespace lgraph {

/// Red/blue orientation of the non-base edges of an embedded plane graph.
/// Red edges point towards v1, blue towards v2.
struct EdgeLabeling {
  PlaneGraph host;
  Vertex v1 = 0;
  Vertex v2 = 1;
  std::vector<Color> color;  // per edge index; None on the base edge
  std::vector<Vertex> tail;  // per edge index; -1 on the base edge

  int n() const { return host.num_vertices(); }
  /// Out-neighbour of every vertex in colour c, -1 where absent.
  std::vector<Vertex> parents(Color c) const;
};

/// Order whose every non-base vertex has exactly two earlier neighbours.
struct TwoCanonicalOrder {
  std::vector<Vertex> order;

  Vertex v1() const { return order[0]; }
  Vertex v2() const { return order[1]; }
};

/// Red and blue part of r on H minus v_n and S_n. The labeling lives on
/// delete_green(r).graph; pass the deletion to keep the vertex mapping.
EdgeLabeling labeling_from_realizer(const SchnyderRealizer& r);
EdgeLabeling labeling_from_realizer(const SchnyderRealizer& r, const GreenDeletion& d);

/// Checks (i) the clockwise pattern out-red, out-blue, in-red*, in-blue* at
/// every vertex other than v1, v2; (ii) only incoming red at v1, incoming
/// blue at v2; (iii) acyclicity once the red edges are reversed.
Report validate_labeling(const EdgeLabeling& el);

/// Ear peeling along the outer path v1 = x_0, ..., x_{k+1} = v2: removes the
/// first x_i whose path edges are its red and blue out-edges and that has no
/// incoming edge. Throws NoEar when no such vertex exists or when the red and
/// blue paths out of it meet.
TwoCanonicalOrder two_canonical_from_labeling(const EdgeLabeling& el);

/// Simulates the boundary path v1 ... v2 of the growing graph. Every v_i
/// (i >= 3) needs exactly two earlier neighbours, both on the path; the
/// vertices strictly between them leave the boundary and may have no
/// neighbour after v_i. Each prefix is checked for biconnectivity. The path
/// construction is itself a planar insertion, so no embedding is consulted.
Report validate_two_canonical(const PlaneGraph& g, const TwoCanonicalOrder& o);

/// Positions of the two earlier neighbours of each vertex on the boundary
/// path: first[v] is the one nearer v1 (the shape carrying v's top endpoint),
/// second[v] the other. -1 for the base vertices. Throws InvalidOrder.
struct Attachment {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};
Attachment attachments(const PlaneGraph& g, const TwoCanonicalOrder& o);

}  // namespace lgraph
