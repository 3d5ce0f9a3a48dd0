#pragma once

#include <cstdint>
#include <vector>

#include "lgraph/plane_graph.hpp"

namespace lgraph {

/// Maximally planar graph on n >= 3 vertices, grown by seeded insertions
/// along a canonical boundary path. Outer face (0, 1, n-1) in clockwise
/// order. Deterministic per (n, seed).
PlaneGraph random_triangulation(int n, std::uint64_t seed);

/// Planar 3-tree: repeated insertion into a random bounded face of the
/// triangle (0, 1, 2), which stays the outer face.
PlaneGraph random_planar_3tree(int n, std::uint64_t seed);

/// Random maximal 2-degenerate graph: starting from edge 0-1, vertex i is
/// joined to two distinct random earlier vertices. Not necessarily planar;
/// no embedding.
PlaneGraph random_stacking(int n, std::uint64_t seed);

/// All planar maximal 2-degenerate graphs on 3..max_n vertices, one per
/// isomorphism class, in a deterministic order.
std::vector<PlaneGraph> all_planar_stackings(int max_n);

/// Canonical adjacency string; equal iff the graphs are isomorphic.
/// Intended for small graphs (n <= 9).
std::vector<std::uint8_t> canonical_form(const PlaneGraph& g);

/// The graph with vertices renamed by perm (vertex v becomes perm[v]).
PlaneGraph relabel(const PlaneGraph& g, const std::vector<Vertex>& perm);

}  // namespace lgraph
