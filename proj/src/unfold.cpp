#include "unfold.hpp"

#include <algorithm>

namespace terrafold {

const StripEntry& StripLayout::entry_for(const std::string& face_id) const {
  for (const StripEntry& e : entries)
    if (e.face == face_id) return e;
  throw ParseError(ErrorCode::InvalidArgument, "face '" + face_id + "' is not in the strip");
}

const PlacedFace* Layout::find(const std::string& id) const {
  for (const PlacedFace& f : faces)
    if (f.id == id) return &f;
  return nullptr;
}

void Layout::recompute_bbox() {
  bool first = true;
  for (const PlacedFace& f : faces) {
    for (const Vec2& v : f.poly) {
      if (first) {
        bbox = Box2{v.x, v.y, v.x, v.y};
        first = false;
      } else {
        if (v.x < bbox.xmin) bbox.xmin = v.x;
        if (v.y < bbox.ymin) bbox.ymin = v.y;
        if (v.x > bbox.xmax) bbox.xmax = v.x;
        if (v.y > bbox.ymax) bbox.ymax = v.y;
      }
    }
  }
}

StripLayout unroll_strip(const TerrainMesh& mesh, size_t i) {
  const Heightfield& hf = mesh.hf;
  if (i >= hf.rows) throw ParseError(ErrorCode::InvalidArgument, "strip index out of range");

  StripLayout strip;
  strip.row = i;
  strip.depth = hf.row_depths[i];
  Rat at = 0;
  for (size_t j = 0; j < hf.cols; ++j) {
    strip.entries.push_back({face_id(FaceKind::Top, i, j), at, hf.col_widths[j]});
    at += hf.col_widths[j];
    if (j + 1 < hf.cols && hf.height(i, j) != hf.height(i, j + 1)) {
      Rat step = abs(hf.height(i, j) - hf.height(i, j + 1));
      strip.entries.push_back({face_id(FaceKind::WallYZ, i, j), at, step});
      at += step;
    }
  }
  strip.total_length = at;
  return strip;
}

BridgeChoice select_bridge(const TerrainMesh& mesh, size_t i) {
  const Heightfield& hf = mesh.hf;
  if (i == 0 || i >= hf.rows)
    throw ParseError(ErrorCode::InvalidArgument, "bridge boundary out of range");

  BridgeChoice choice;
  choice.boundary = i;
  choice.col = 0;
  choice.height = 0;
  for (size_t j = 0; j < hf.cols; ++j) {
    Rat diff = abs(hf.height(i - 1, j) - hf.height(i, j));
    if (diff > choice.height) {
      choice.height = diff;
      choice.col = j;
    }
  }
  return choice;
}

namespace {

Polygon2 rect(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

PlacedFace placed(const TerrainMesh& mesh, const std::string& id, Polygon2 poly,
                  std::optional<std::string> parent = std::nullopt,
                  std::optional<Segment2> fold = std::nullopt) {
  PlacedFace f;
  f.id = id;
  f.kind = mesh.at(id).kind;
  f.poly = std::move(poly);
  f.parent = std::move(parent);
  f.fold_edge = std::move(fold);
  return f;
}

// Parallelogram rising from the segment [x0,x1] x {y} by `height`, with the
// far edge displaced horizontally by `lean` (and downward when `down`).
Polygon2 leaning_quad(const Rat& x0, const Rat& x1, const Rat& y, const Rat& height,
                      const Rat& lean, bool down) {
  if (down) {
    return {{x0 + lean, y - height}, {x1 + lean, y - height}, {x1, y}, {x0, y}};
  }
  return {{x0, y}, {x1, y}, {x1 + lean, y + height}, {x0 + lean, y + height}};
}

void place_base_sides_backs(const TerrainMesh& mesh, const Rat& slope, Layout& out) {
  const Heightfield& hf = mesh.hf;
  const auto xs = hf.col_edges();
  const auto ys = hf.row_edges();
  const Rat W = xs[hf.cols], D = ys[hf.rows];

  out.faces.push_back(placed(mesh, "base", rect(0, W, -D, 0)));

  // Rows keep their order under the flip: row i lands on [-ys[i+1], -ys[i]].
  for (size_t i = 0; i < hf.rows; ++i) {
    const Rat& h = hf.height(i, 0);
    out.faces.push_back(placed(mesh, face_id(FaceKind::SideLeft, i, 0),
                               rect(-h, 0, -ys[i + 1], -ys[i]), "base",
                               Segment2{{Rat(0), -ys[i + 1]}, {Rat(0), -ys[i]}}));
  }
  for (size_t i = 0; i < hf.rows; ++i) {
    const Rat& h = hf.height(i, hf.cols - 1);
    out.faces.push_back(placed(mesh, face_id(FaceKind::SideRight, i, 0),
                               rect(W, W + h, -ys[i + 1], -ys[i]), "base",
                               Segment2{{W, -ys[i + 1]}, {W, -ys[i]}}));
  }
  for (size_t j = 0; j < hf.cols; ++j) {
    const Rat& h = hf.height(hf.rows - 1, j);
    out.faces.push_back(placed(mesh, face_id(FaceKind::Back, 0, j),
                               leaning_quad(xs[j], xs[j + 1], -D, h, slope * h, true), "base",
                               Segment2{{xs[j], -D}, {xs[j + 1], -D}}));
  }
}

FrontInfo place_fronts(const TerrainMesh& mesh, const Rat& slope, Layout& out) {
  const Heightfield& hf = mesh.hf;
  const auto xs = hf.col_edges();

  FrontInfo info;
  info.tallest = hf.height(0, 0);
  info.attach_col = 0;
  for (size_t j = 1; j < hf.cols; ++j) {
    if (hf.height(0, j) > info.tallest) {
      info.tallest = hf.height(0, j);
      info.attach_col = j;
    }
  }
  for (size_t j = 0; j < hf.cols; ++j) {
    const Rat& h = hf.height(0, j);
    out.faces.push_back(placed(mesh, face_id(FaceKind::Front, 0, j),
                               leaning_quad(xs[j], xs[j + 1], 0, h, slope * h, false), "base",
                               Segment2{{xs[j], Rat(0)}, {xs[j + 1], Rat(0)}}));
  }
  return info;
}

struct PlacedInterval {
  Rat left, right;
};

Layout assemble(const TerrainMesh& mesh, const Rat& slope) {
  const Heightfield& hf = mesh.hf;
  const auto xs = hf.col_edges();

  Layout out;
  out.sheared = slope != 0;
  out.slope = out.sheared ? slope : Rat(0);

  place_base_sides_backs(mesh, slope, out);
  FrontInfo front = place_fronts(mesh, slope, out);

  // Tops' planar x-intervals per row, needed to stand the next boundary's
  // connectors on them and to align the next band.
  std::vector<std::unordered_map<size_t, PlacedInterval>> top_spans(hf.rows);

  Rat band_base;  // y where the current band starts
  for (size_t i = 0; i < hf.rows; ++i) {
    StripLayout strip = unroll_strip(mesh, i);

    size_t anchor_col;
    std::string anchor_parent;
    Rat anchor_left;  // target planar x of the anchor top's left edge

    if (i == 0) {
      anchor_col = front.attach_col;
      anchor_parent = face_id(FaceKind::Front, 0, anchor_col);
      anchor_left = xs[anchor_col] + slope * front.tallest;
      band_base = front.tallest;
    } else {
      BridgeChoice bridge = select_bridge(mesh, i);
      const Rat band_top = band_base + hf.row_depths[i - 1];

      if (bridge.height == 0) {
        // Rows agree everywhere: no connectors, bands attach directly.
        anchor_col = 0;
        anchor_parent = face_id(FaceKind::Top, i - 1, 0);
        anchor_left = top_spans[i - 1][0].left;
        band_base = band_top;
      } else {
        for (size_t j = 0; j < hf.cols; ++j) {
          Rat delta = hf.height(i, j) - hf.height(i - 1, j);
          if (delta == 0) continue;
          bool rising = delta > 0;
          Rat step = rising ? delta : -delta;
          Rat lean = slope * step * (rising ? 1 : -1);
          const PlacedInterval& span = top_spans[i - 1][j];
          std::string id = face_id(FaceKind::ConnXZ, i - 1, j);
          out.faces.push_back(placed(
              mesh, id, leaning_quad(span.left, span.right, band_top, step, lean, false),
              face_id(FaceKind::Top, i - 1, j),
              Segment2{{span.left, band_top}, {span.right, band_top}}));
        }
        Rat bridge_delta = hf.height(i, bridge.col) - hf.height(i - 1, bridge.col);
        Rat bridge_lean = slope * (bridge_delta > 0 ? bridge.height : -bridge.height);
        anchor_col = bridge.col;
        anchor_parent = face_id(FaceKind::ConnXZ, i - 1, bridge.col);
        anchor_left = top_spans[i - 1][bridge.col].left + bridge_lean;
        band_base = band_top + bridge.height;
      }
    }

    // Rigid band: shift the unrolled strip so the anchor top lands on target.
    const StripEntry& anchor = strip.entry_for(face_id(FaceKind::Top, i, anchor_col));
    Rat shift = anchor_left - anchor.offset;
    const Rat band_top = band_base + strip.depth;

    size_t anchor_idx = 0;
    for (size_t k = 0; k < strip.entries.size(); ++k)
      if (strip.entries[k].face == anchor.face) anchor_idx = k;

    for (size_t k = 0; k < strip.entries.size(); ++k) {
      const StripEntry& e = strip.entries[k];
      Rat left = shift + e.offset;
      Rat right = left + e.length;
      const Face& mf = mesh.at(e.face);
      if (mf.kind == FaceKind::Top) top_spans[i][mf.col] = {left, right};

      std::string parent;
      Segment2 fold;
      if (k == anchor_idx) {
        parent = anchor_parent;
        fold = Segment2{{left, band_base}, {right, band_base}};
      } else if (k < anchor_idx) {
        parent = strip.entries[k + 1].face;
        fold = Segment2{{right, band_base}, {right, band_top}};
      } else {
        parent = strip.entries[k - 1].face;
        fold = Segment2{{left, band_base}, {left, band_top}};
      }
      out.faces.push_back(placed(mesh, e.face, rect(left, right, band_base, band_top),
                                 std::move(parent), std::move(fold)));
    }
  }

  // Canonical order: the mesh's construction order.
  std::unordered_map<std::string, size_t> where;
  where.reserve(out.faces.size());
  for (size_t k = 0; k < out.faces.size(); ++k) where.emplace(out.faces[k].id, k);
  std::vector<PlacedFace> ordered;
  ordered.reserve(out.faces.size());
  for (const Face& f : mesh.faces) ordered.push_back(std::move(out.faces[where.at(f.id)]));
  out.faces = std::move(ordered);

  out.recompute_bbox();
  return out;
}

}  // namespace

Layout unfold_base_and_sides(const TerrainMesh& mesh) {
  Layout out;
  place_base_sides_backs(mesh, Rat(0), out);
  out.recompute_bbox();
  return out;
}

FrontInfo unfold_front(const TerrainMesh& mesh, Layout& layout) {
  FrontInfo info = place_fronts(mesh, Rat(0), layout);
  layout.recompute_bbox();
  return info;
}

Layout compute_layout(const TerrainMesh& mesh) { return assemble(mesh, Rat(0)); }

Layout shear_layout(const TerrainMesh& mesh, const Rat& slope) {
  if (slope < 0) throw ParseError(ErrorCode::InvalidArgument, "shear slope must be >= 0");
  return assemble(mesh, slope);
}

}  // namespace terrafold
