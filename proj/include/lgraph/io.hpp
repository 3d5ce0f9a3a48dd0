#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "lgraph/labeling.hpp"
#include "lgraph/lift3d.hpp"
#include "lgraph/lrep.hpp"
#include "lgraph/plane_graph.hpp"
#include "lgraph/schnyder.hpp"
#include "lgraph/sl.hpp"

namespace lgraph {

using Json = nlohmann::json;

struct GraphDocument {
  PlaneGraph graph;
  std::optional<std::pair<Vertex, Vertex>> base_edge;
};

/// {"n", "edges", "rotation"?, "outer_face"?, "base_edge"?, "labels"?}.
/// rotation lists edge indices clockwise around each vertex. Without one the
/// graph is embedded by Boyer-Myrvold; a graph that is not planar raises
/// NotPlanar. Throws MalformedInput, InconsistentRotation.
GraphDocument load_graph(const Json& doc);
/// Same, but a missing rotation is left missing (no embedding attempted).
GraphDocument load_abstract_graph(const Json& doc);
Json graph_to_json(const PlaneGraph& g, std::optional<std::pair<Vertex, Vertex>> base_edge = std::nullopt);

Json rational_pair(const Rational& a, const Rational& b);

Json realizer_to_json(const SchnyderRealizer& r);
/// The host is taken from doc["graph"].
SchnyderRealizer realizer_from_json(const Json& doc);

Json labeling_to_json(const EdgeLabeling& el);

/// {"graph", "v1", "v2", "shapes": [{"v", "top", "right"}]}.
Json rep_to_json(const LRepresentation& rep);
LRepresentation rep_from_json(const Json& doc);

/// {"graph", "proper", "boxes": [{"v", "x", "y", "z"}]}.
Json cuboids_to_json(const CuboidRepresentation& cr);
CuboidRepresentation cuboids_from_json(const Json& doc);
Json triangles_to_json(const TriangleRepresentation& tr);
TriangleRepresentation triangles_from_json(const Json& doc);
Json trace_to_json(const std::vector<TraceEntry>& trace);

Json read_json_file(const std::string& path);
/// Writes to a temporary file next to `path` and renames it into place.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lgraph
