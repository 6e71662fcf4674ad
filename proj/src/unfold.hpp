#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mesh.hpp"

namespace terrafold {

// One row of tops and the step walls between them, unrolled left to right
// into a straight band. `offset` is the left edge of each piece within the
// band's local coordinates; the pieces tile [0, total_length] exactly.
struct StripEntry {
  std::string face;
  Rat offset;
  Rat length;
};

struct StripLayout {
  size_t row = 0;
  std::vector<StripEntry> entries;
  Rat total_length;  // sum of column widths plus all step heights of the row
  Rat depth;

  const StripEntry& entry_for(const std::string& face_id) const;
};

// The tallest row-to-row step rectangle at a boundary; it sets the vertical
// gap between the unrolled bands and carries the attachment between them.
// height == 0 means the rows agree everywhere and the bands attach directly
// along their shared edge (at column 0).
struct BridgeChoice {
  size_t boundary = 0;  // between rows boundary-1 and boundary
  size_t col = 0;       // leftmost column attaining the maximum
  Rat height;
};

// A face placed in the plane: a convex counterclockwise polygon (rectangle,
// or a parallelogram in sheared mode), its fold-attachment parent, and the
// shared planar segment it folds along.
struct PlacedFace {
  std::string id;
  FaceKind kind = FaceKind::Base;
  Polygon2 poly;
  std::optional<std::string> parent;
  std::optional<Segment2> fold_edge;
};

struct Layout {
  bool sheared = false;
  Rat slope;                      // 0 unless sheared
  std::vector<PlacedFace> faces;  // mesh construction order when complete
  Box2 bbox;

  const PlacedFace* find(const std::string& id) const;
  void recompute_bbox();
};

// Unrolls row `i` (0 <= i < rows): tops in column order, interleaved with the
// walls between unequal neighbors, no mirroring.
StripLayout unroll_strip(const TerrainMesh& mesh, size_t i);

// Picks the bridge at boundary `i` (1 <= i <= rows-1): the maximal height
// difference |h[i-1][j] - h[i][j]|, leftmost column on ties.
BridgeChoice select_bridge(const TerrainMesh& mesh, size_t i);

// Step one and the flip: the base lands on [0,W] x [-D,0] (its y mirrored),
// ringed by the left/right side faces and, beyond y = -D, the back faces, all
// attached to the base.
Layout unfold_base_and_sides(const TerrainMesh& mesh);

// Step two: the front faces stand on y = 0 above the flipped base, column by
// column. Returns the height of the tallest front face (the gap below the
// first band) and the leftmost column attaining it (the band's attachment).
struct FrontInfo {
  Rat tallest;
  size_t attach_col = 0;
};
FrontInfo unfold_front(const TerrainMesh& mesh, Layout& layout);

// Step three on top of the first two: every band separated from its
// predecessor by the bridge height, connectors standing on the lower band,
// bands aligned so the bridge joins the two tops of its column. The result
// places every mesh face exactly once; parents form a spanning tree rooted at
// the base.
Layout compute_layout(const TerrainMesh& mesh);

// Same assembly with the slanted-axis transform applied to the face shapes:
// bands stay rigid, while connector/front/back rectangles become
// parallelograms of unchanged height whose far edge is displaced by
// slope * height, toward +x where the surface rises across the boundary and
// -x where it falls. No non-overlap guarantee; slope 0 reproduces
// compute_layout exactly.
Layout shear_layout(const TerrainMesh& mesh, const Rat& slope);

}  // namespace terrafold
