#pragma once

#include <array>
#include <string>
#include <vector>

#include "lgraph/lrep.hpp"
#include "lgraph/rational.hpp"
#include "lgraph/report.hpp"
#include "lgraph/schnyder.hpp"

namespace lgraph {

/// Heights of the host vertices; entry n is the dummy v_{n+1}.
struct HeightAssignment {
  std::vector<Rational> h;
  std::string provenance;  // "canonical" or "cubic"
};

/// h(v_i) = -i along the order (1-based), dummy -(n+1).
HeightAssignment heights_from_canonical(const CanonicalOrder& co);

/// h(sigma_1 v), h(sigma_2 v) >= h(v) > h(sigma_n v) for inner v, and
/// h(v_{n+1}) < h(v_n). With `strict_tree_only` the first two are skipped.
Report check_heights(const SchnyderRealizer& r, const HeightAssignment& h, bool strict_tree_only = false);

struct Box {
  std::array<Rational, 2> x, y, z;

  friend bool operator==(const Box&, const Box&) = default;
};

struct CuboidRepresentation {
  PlaneGraph host;
  std::vector<Box> boxes;       // indexed by host vertex
  std::vector<LShape> shapes;   // the L's the boxes came from, v_n included
  bool proper = false;
};

/// L of v_n: top (x^t_{v1}, y^r_{v1}), right (x^t_{v2}, y^r_{v2}).
LShape vn_shape(const LShape& s1, const LShape& s2);

/// Q_v = [x^t, x^r] x [y^r, y^t] x [h(sigma_n v), h(v)]. The vertices of rep
/// are those of delete_green(r). Throws Error when rep and r disagree.
CuboidRepresentation lift_cuboids(const LRepresentation& rep, const SchnyderRealizer& r, const HeightAssignment& h);

/// Same boxes from shapes given per host vertex (v_n included).
CuboidRepresentation boxes_from_shapes(const SchnyderRealizer& r, const std::vector<LShape>& shapes,
                                       const HeightAssignment& h);

enum class BoxMeet { Disjoint, Face, Lower, Overlap };

/// Per-axis overlap lengths: one axis apart means disjoint, all three positive
/// means interiors overlap, exactly one zero is a face contact.
BoxMeet classify(const Box& a, const Box& b);

struct CuboidCheck {
  Report report;
  bool proper = false;
};

/// Pairwise classification against the host edges; proper iff every edge is a
/// face contact. Parallel over pairs; the serial form is the reference.
CuboidCheck validate_cuboids(const CuboidRepresentation& cr);
CuboidCheck validate_cuboids_serial(const CuboidRepresentation& cr);

}  // namespace lgraph
