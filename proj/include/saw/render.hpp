#pragma once

#include <algorithm>
#include <sstream>
#include <string>

#include "saw/aztec.hpp"
#include "saw/lattice.hpp"

namespace saw {

struct SvgStyle {
  double scale = 10.0;  // pixels per lattice unit
  double margin = 1.0;  // lattice units around the drawing
  std::string stroke = "#1f4e9c";
  double stroke_width = 0.25;
  bool grid = false;
  std::string class1_fill = "#f2c14e";
  std::string class2_fill = "#5b8e7d";
};

namespace detail {

// Lattice y points up; SVG y points down.
inline std::string svg_open(double x0, double y0, double x1, double y1, const SvgStyle& s) {
  std::ostringstream o;
  const double w = x1 - x0, h = y1 - y0;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * s.scale << "\" height=\"" << h * s.scale
    << "\" viewBox=\"" << x0 << ' ' << -y1 << ' ' << w << ' ' << h << "\">\n";
  return o.str();
}

inline std::string polyline(const std::vector<Point>& pts, const SvgStyle& s) {
  std::ostringstream o;
  o << "<polyline fill=\"none\" stroke=\"" << s.stroke << "\" stroke-width=\"" << s.stroke_width
    << "\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) o << (i ? " " : "") << pts[i].x << ',' << -pts[i].y;
  o << "\"/>\n";
  return o.str();
}

inline std::string endpoint_marks(Point a, Point b, const SvgStyle& s) {
  std::ostringstream o;
  const double r = std::max(0.3, s.stroke_width * 1.6);
  o << "<circle cx=\"" << a.x << "\" cy=\"" << -a.y << "\" r=\"" << r << "\" fill=\"#c0392b\"/>\n";
  o << "<circle cx=\"" << b.x << "\" cy=\"" << -b.y << "\" r=\"" << r << "\" fill=\"#27ae60\"/>\n";
  return o.str();
}

}  // namespace detail

inline std::string render_walk_svg(const Walk& w, const SvgStyle& style = {}) {
  const auto pts = points_of(w);
  Point lo = pts.front(), hi = pts.front();
  for (Point p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double x0 = static_cast<double>(lo.x) - style.margin, x1 = static_cast<double>(hi.x) + style.margin;
  const double y0 = static_cast<double>(lo.y) - style.margin, y1 = static_cast<double>(hi.y) + style.margin;
  std::ostringstream o;
  o << detail::svg_open(x0, y0, x1, y1, style);
  o << "<rect x=\"" << x0 << "\" y=\"" << -y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y1 - y0
    << "\" fill=\"white\"/>\n";
  if (style.grid) {
    o << "<g stroke=\"#dddddd\" stroke-width=\"0.05\">\n";
    for (coord_t x = lo.x; x <= hi.x; ++x) o << "<line x1=\"" << x << "\" y1=\"" << -hi.y << "\" x2=\"" << x << "\" y2=\"" << -lo.y << "\"/>\n";
    for (coord_t y = lo.y; y <= hi.y; ++y) o << "<line x1=\"" << lo.x << "\" y1=\"" << -y << "\" x2=\"" << hi.x << "\" y2=\"" << -y << "\"/>\n";
    o << "</g>\n";
  }
  o << detail::polyline(pts, style);
  o << detail::endpoint_marks(pts.front(), pts.back(), style);
  o << "</svg>\n";
  return o.str();
}

/// Cells filled by class, with the interface walk on top.
inline std::string render_partition_svg(const Partition& p, const SvgStyle& style = {}) {
  const auto& g = aztec_geometry(p.k);
  const double k = p.k;
  const double x0 = -k - style.margin, x1 = k + style.margin;
  std::ostringstream o;
  o << detail::svg_open(x0, x0, x1, x1, style);
  o << "<rect x=\"" << x0 << "\" y=\"" << x0 << "\" width=\"" << x1 - x0 << "\" height=\"" << x1 - x0
    << "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < g.dual_count(); ++i) {
    const Point c = g.dual()[i];  // doubled centre
    const double cx = static_cast<double>(c.x) / 2, cy = static_cast<double>(c.y) / 2;
    o << "<rect x=\"" << cx - 0.5 << "\" y=\"" << -cy - 0.5 << "\" width=\"1\" height=\"1\" fill=\""
      << (p.label[i] == 1 ? style.class1_fill : style.class2_fill) << "\" stroke=\"white\" stroke-width=\"0.04\"/>\n";
  }
  try {
    const Walk w = partition_to_path(p);
    const auto pts = points_of(w);
    o << detail::polyline(pts, style);
    o << detail::endpoint_marks(pts.front(), pts.back(), style);
  } catch (const invalid_argument&) {
    // closed interface: cells alone show the split
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace saw
