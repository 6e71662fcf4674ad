#include "svg.hpp"

namespace terrafold {

namespace {

// SVG y grows downward; the net is drawn with y negated so +y is up.
std::string coord(const Rat& x, const Rat& y) {
  return to_decimal(x) + " " + to_decimal(-y);
}

}  // namespace

std::string layout_to_svg(const Layout& layout) {
  const Box2& bb = layout.bbox;
  Rat x0 = bb.xmin - 1, y0 = -bb.ymax - 1;
  Rat w = bb.xmax - bb.xmin + 2, h = bb.ymax - bb.ymin + 2;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + to_decimal(x0) + " " +
         to_decimal(y0) + " " + to_decimal(w) + " " + to_decimal(h) + "\">\n";
  out += "  <style>\n"
         "    path { stroke: #333; stroke-width: 0.02; }\n"
         "    .base { fill: #d9d9d9; }\n"
         "    .top { fill: #bcd9a0; }\n"
         "    .front { fill: #a0c4d9; }\n"
         "    .back { fill: #a0c4d9; }\n"
         "    .side_left { fill: #d9c4a0; }\n"
         "    .side_right { fill: #d9c4a0; }\n"
         "    .wall_yz { fill: #e8e0b0; }\n"
         "    .conn_xz { fill: #d9a0a8; }\n"
         "    .fold { stroke: #555; stroke-width: 0.015; stroke-dasharray: 0.08 0.06; }\n"
         "  </style>\n";
  for (const PlacedFace& f : layout.faces) {
    out += "  <path id=\"" + f.id + "\" class=\"" + kind_name(f.kind) + "\" d=\"";
    for (size_t k = 0; k < f.poly.size(); ++k) {
      out += (k == 0 ? "M " : "L ");
      out += coord(f.poly[k].x, f.poly[k].y);
      out += " ";
    }
    out += "Z\"/>\n";
  }
  for (const PlacedFace& f : layout.faces) {
    if (!f.fold_edge) continue;
    const Segment2& e = *f.fold_edge;
    out += "  <line class=\"fold\" x1=\"" + to_decimal(e.a.x) + "\" y1=\"" + to_decimal(-e.a.y) +
           "\" x2=\"" + to_decimal(e.b.x) + "\" y2=\"" + to_decimal(-e.b.y) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace terrafold
