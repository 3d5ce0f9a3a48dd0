#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lgraph {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, optionally carrying a
/// combinatorial embedding.
///
/// The embedding is a rotation system: for every vertex the clockwise cyclic
/// order of its neighbours. Faces are the orbits of the dart map
/// (u -> v) |-> (v -> w), where w follows u clockwise around v. With this
/// convention bounded faces are traversed counterclockwise and the outer face
/// clockwise, so `outer_face()` lists the outer vertices in clockwise order.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Abstract graph without embedding. Throws MalformedInput on self-loops,
  /// parallel edges or out-of-range endpoints.
  PlaneGraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbours of v; in clockwise order when the graph is embedded.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }
  /// Index into edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  bool embedded() const { return embedded_; }
  const std::vector<Vertex>& outer_face() const { return outer_; }

  /// Installs a rotation system (clockwise neighbour lists) and outer face.
  /// If `outer` is empty the face containing the dart of edge 0 is used. If
  /// `outer` is an orbit only of the mirrored rotation, the rotation is
  /// mirrored. Throws InconsistentRotation if the lists are not permutations
  /// of the neighbourhoods, Euler's formula fails, or `outer` is not a face.
  void set_embedding(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer = {});

  /// Clockwise successor of u around v. Requires an embedding.
  Vertex next_cw(Vertex v, Vertex u) const;
  Vertex prev_cw(Vertex v, Vertex u) const;
  /// Position of u in the rotation of v.
  int rotation_index(Vertex v, Vertex u) const;

  /// The face orbit starting with the dart u -> v.
  std::vector<Vertex> face_from_dart(Vertex u, Vertex v) const;
  std::vector<std::vector<Vertex>> faces() const;

  int num_components() const;

  std::vector<std::string> labels;

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }
  void index_rotation();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::unordered_map<std::uint64_t, int> edge_of_;
  std::unordered_map<std::uint64_t, int> dart_pos_;
  std::vector<Vertex> outer_;
  bool embedded_ = false;
};

/// True iff `a` and `b` list the same cyclic sequence.
bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

/// Computes a planar embedding with Boyer-Myrvold (quadratic checks aside,
/// linear time) and installs it. Throws NotPlanar.
void embed(PlaneGraph& g, std::vector<Vertex> outer = {});

bool is_planar(const PlaneGraph& g);

/// Graph induced on `keep` (in that order); vertex i of the result is keep[i].
/// The embedding, if any, is restricted; the outer face is dropped.
PlaneGraph induced_subgraph(const PlaneGraph& g, const std::vector<Vertex>& keep);

/// Connected components of g minus `removed`, as a component id per vertex
/// (-1 for removed vertices).
std::vector<int> components_without(const PlaneGraph& g, const std::vector<Vertex>& removed);

/// True iff the subgraph induced by vertices with mask[v] is biconnected
/// (at least 3 vertices, connected, no cut vertex). Independent DFS check.
bool is_biconnected(const PlaneGraph& g, const std::vector<char>& mask);

}  // namespace lgraph
