#pragma once

#include <string>

#include "lgraph/lift3d.hpp"
#include "lgraph/lrep.hpp"
#include "lgraph/sl.hpp"

namespace lgraph {

struct SvgOptions {
  bool overlay_staircase = false;
  double viewport = 1000;
};

/// One polyline per L (v1 and v2 drawn in the base colour), plus the outer
/// staircase as one more polyline when requested. Rationals become floats
/// only here.
std::string render_svg(const LRepresentation& rep, const SvgOptions& opt = {});

/// One filled polygon per triangle.
std::string render_svg(const TriangleRepresentation& tr, const SvgOptions& opt = {});

/// One group of 8 vertices and 6 quads per box, named by the vertex label.
std::string export_obj(const CuboidRepresentation& cr);

}  // namespace lgraph
