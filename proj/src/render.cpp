#include "lgraph/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace lgraph {

namespace {

// Fits the points into [margin, viewport - margin]^2, y pointing down.
struct Frame {
  double x0 = 0, y1 = 0, scale = 1, margin = 20;

  Frame(const std::vector<Point>& pts, double viewport) {
    if (pts.empty()) return;
    double xmin = to_double(pts[0].x), xmax = xmin, ymin = to_double(pts[0].y), ymax = ymin;
    for (const auto& p : pts) {
      double x = to_double(p.x), y = to_double(p.y);
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    x0 = xmin;
    y1 = ymax;
    scale = (viewport - 2 * margin) / span;
  }

  std::string operator()(const Point& p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", margin + (to_double(p.x) - x0) * scale,
                  margin + (y1 - to_double(p.y)) * scale);
    return buf;
  }
};

std::string header(double viewport) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << viewport << ' ' << viewport << "\">\n";
  return os.str();
}

std::string label(const PlaneGraph& g, Vertex v) {
  return v < static_cast<int>(g.labels.size()) ? g.labels[v] : "v" + std::to_string(v);
}

}  // namespace

std::string render_svg(const LRepresentation& rep, const SvgOptions& opt) {
  std::vector<Point> pts;
  for (const auto& s : rep.shapes) {
    pts.push_back(s.top);
    pts.push_back(s.right);
    pts.push_back(s.bend());
  }
  Frame f(pts, opt.viewport);
  std::ostringstream os;
  os << header(opt.viewport);
  for (Vertex v = 0; v < static_cast<int>(rep.shapes.size()); ++v) {
    const auto& s = rep.shapes[v];
    bool base = v == rep.v1 || v == rep.v2;
    os << "<polyline id=\"" << label(rep.host, v) << "\" fill=\"none\" stroke=\"" << (base ? "#c0392b" : "#222")
       << "\" stroke-width=\"" << (base ? 3 : 2) << "\" points=\"" << f(s.top) << ' ' << f(s.bend()) << ' '
       << f(s.right) << "\"/>\n";
  }
  if (opt.overlay_staircase) {
    std::vector<std::optional<LShape>> opt_shapes(rep.shapes.begin(), rep.shapes.end());
    if (auto st = trace_staircase(opt_shapes, rep.v1, rep.v2)) {
      os << "<polyline class=\"staircase\" fill=\"none\" stroke=\"#2980b9\" stroke-dasharray=\"6 4\" points=\"";
      for (std::size_t i = 0; i < st->points.size(); ++i) os << (i ? " " : "") << f(st->points[i]);
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const TriangleRepresentation& tr, const SvgOptions& opt) {
  std::vector<Point> pts;
  for (const auto& t : tr.triangles) pts.insert(pts.end(), {t.bend, t.top, t.right});
  Frame f(pts, opt.viewport);
  std::ostringstream os;
  os << header(opt.viewport);
  static const char* fills[] = {"#e74c3c", "#3498db", "#2ecc71", "#f1c40f", "#9b59b6", "#1abc9c"};
  for (Vertex v = 0; v < static_cast<int>(tr.triangles.size()); ++v) {
    const auto& t = tr.triangles[v];
    os << "<polygon id=\"" << label(tr.host, v) << "\" fill=\"" << fills[v % 6]
       << "\" fill-opacity=\"0.6\" stroke=\"#222\" points=\"" << f(t.bend) << ' ' << f(t.top) << ' ' << f(t.right)
       << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string export_obj(const CuboidRepresentation& cr) {
  std::ostringstream os;
  os << "# " << cr.boxes.size() << " boxes\n";
  // corner k: bit 0 picks x, bit 1 y, bit 2 z
  static const int quads[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  char buf[128];
  for (std::size_t b = 0; b < cr.boxes.size(); ++b) {
    const auto& box = cr.boxes[b];
    os << "g " << label(cr.host, static_cast<Vertex>(b)) << '\n';
    for (int k = 0; k < 8; ++k) {
      std::snprintf(buf, sizeof buf, "v %.6f %.6f %.6f\n", to_double(box.x[k & 1]), to_double(box.y[(k >> 1) & 1]),
                    to_double(box.z[(k >> 2) & 1]));
      os << buf;
    }
    for (const auto& q : quads) {
      os << 'f';
      for (int i : q) os << ' ' << 8 * b + i + 1;
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace lgraph
