#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgraph/lift3d.hpp"
#include "lgraph/lrep.hpp"
#include "lgraph/rational.hpp"
#include "lgraph/report.hpp"
#include "lgraph/schnyder.hpp"

namespace lgraph {

/// Region index used by the visibility graphs: the region R_w of an inner
/// vertex is its host id; these two mark the v_n region and the outside.
inline constexpr int kSourceRegion = -2;
inline constexpr int kOuterRegion = -1;

/// A piece of a leg between two consecutive points of the structure.
struct Segment {
  Vertex owner;     // host vertex
  bool horizontal;
  int index;        // position along the leg (top to bottom, left to right)
  int low = kOuterRegion;   // region below (horizontal) or to the left (vertical)
  int high = kOuterRegion;  // region above or to the right
};

struct Equation {
  std::vector<std::pair<int, Rational>> terms;
  Rational rhs;
  std::string kind;  // "contact", "closure-h", "closure-v", "equilateral", "normalize", "excess"
};

/// Segment-length system of the L-structure a realizer determines. Points on
/// a vertical leg: top, incoming blue contacts top to bottom, bend. On a
/// horizontal leg: bend, incoming red contacts left to right, right end. The
/// top of v2 counts as a red contact of v1.
struct SegmentSystem {
  SchnyderRealizer realizer;
  std::vector<std::vector<Vertex>> red_in;   // per host vertex, left to right
  std::vector<std::vector<Vertex>> blue_in;  // per host vertex, top to bottom
  std::vector<int> vfirst, hfirst;           // first unknown of each leg, -1 for v_n
  std::vector<Segment> segments;
  std::vector<Equation> equations;
  std::vector<std::pair<int, int>> pairs;  // (horizontal, vertical) segment met at each contact

  int unknowns() const { return static_cast<int>(segments.size()); }
  int vcount(Vertex v) const { return static_cast<int>(blue_in[v].size()) + 1; }
  int hcount(Vertex v) const { return static_cast<int>(red_in[v].size()) + 1; }
};

/// Throws NotTriangulation if r is not a valid realizer.
SegmentSystem build_segment_system(const SchnyderRealizer& r);

struct SegmentSolution {
  std::vector<Rational> lengths;
  bool approximate = false;  // floating fallback was used
  double residual = 0;
};

/// Exact sparse elimination; above `exact_limit` host vertices a floating
/// sparse LU is used and the residual reported. Throws SingularSystem.
SegmentSolution solve_segment_system(const SegmentSystem& s, int exact_limit = 200);

/// '+', '0' or '-' per unknown.
std::string sign_pattern(const std::vector<Rational>& x);

/// Coordinates from segment lengths, v1's bend at the origin. The result is
/// a representation of delete_green(realizer) (same vertex numbering).
LRepresentation realize_segments(const SegmentSystem& s, const std::vector<Rational>& lengths);

/// Per vertex of the triangulation (v_n through its synthesized L): both
/// endpoints and the bends of its sigma_n-children on one slope -1 line.
/// Also the paired-segment reading at every contact plus equal legs; the two
/// readings are compared. rep is a representation of delete_green(r).
Report validate_sl(const LRepresentation& rep, const SchnyderRealizer& r);

struct TraceEntry {
  std::uint64_t realizer_hash = 0;
  std::string signs;
  Rational min_entry;
};

struct SLOutcome {
  bool converged = false;
  SchnyderRealizer realizer;
  SegmentSolution solution;
  LRepresentation rep;
  std::vector<TraceEntry> trace;
};

/// Solve; if some segment is not positive, reverse a cyclically oriented
/// triangle (facial or separating, not the outer one) and repeat. Triangles
/// are ranked by the smallest segment value their vertices own, ties by
/// index; the first one whose flip leads to an unvisited realizer is taken.
/// Stops unconverged after max_iters flips or when every flip revisits.
SLOutcome felsner_iterate(const SchnyderRealizer& r0, int max_iters);

struct Triangle {
  Point bend, top, right;
  Rational size() const { return top.y - bend.y; }
};

struct TriangleRepresentation {
  PlaneGraph host;
  std::vector<Triangle> triangles;
};

/// conv(L_v) for every vertex of the triangulation, v_n included, in host
/// numbering. Throws NotSL.
TriangleRepresentation homothetic_triangles(const LRepresentation& rep, const SchnyderRealizer& r);

/// Intersection size of two translates of the model triangle
/// {x >= 0, y >= 0, x + y <= t}: negative apart, zero touching, positive overlapping.
Rational triangle_meet(const Triangle& a, const Triangle& b);

/// Pairwise interior-disjointness, contact graph equal to the host, and each
/// triangle a positive multiple of the model plus a shift.
Report validate_triangles(const TriangleRepresentation& tr);

/// Cubes with h(v_{n+1}) = 0 and h(v) = h(sigma_n v) + |L_v|. Throws NotSL.
CuboidRepresentation cubes_from_sl(const LRepresentation& rep, const SchnyderRealizer& r);

/// Cubic heights on their own.
HeightAssignment cubic_heights(const SchnyderRealizer& r, const std::vector<LShape>& host_shapes);

/// G_h, G_v with segment lengths as flows: conservation at every inner
/// region and equal flow on the two segments met at each contact.
Report visibility_flow_check(const SegmentSystem& s, const std::vector<Rational>& lengths);

}  // namespace lgraph
