#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unfold.hpp"

namespace terrafold {

enum class CheckStatus { Pass, Fail, Skipped };

const char* check_status_name(CheckStatus s);

// A concrete certificate of failure: the faces involved and, for overlaps, a
// rational point interior to both.
struct Witness {
  std::string check;
  std::string kind;
  std::vector<std::string> faces;
  std::optional<Vec2> point;
  std::string detail;
};

struct CheckResult {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerificationReport {
  // Keys: weak_simplicity, area, tree, refold.
  std::map<std::string, CheckResult> checks;
  std::vector<Witness> witnesses;

  bool all_passed() const;
};

// No two placed faces share interior points; shared boundary is permitted.
// Every predicate is exact — there is no tolerance anywhere in this module.
// Degenerate (zero-area or non-convex) placed faces fail with a witness.
CheckResult check_weak_simplicity(const Layout& layout, std::vector<Witness>& witnesses);

// The planar faces carry exactly the surface area of the mesh.
CheckResult check_area(const Layout& layout, const TerrainMesh& mesh,
                       std::vector<Witness>& witnesses);

// Parent links form a spanning tree over all mesh faces, rooted at the base;
// each fold edge is a positive-length segment lying on an edge of both placed
// polygons, between mesh-adjacent faces, with squared length equal to the
// shared 3D edge's.
CheckResult check_tree(const Layout& layout, const TerrainMesh& mesh,
                       std::vector<Witness>& witnesses);

// Walks the fold tree from the base, propagating the rigid motion across each
// fold edge, and demands every face's planar vertices map exactly onto its 3D
// rectangle's corners. Orthogonal mode only (sheared faces are not congruent
// to their 3D sources); call sites skip it for sheared layouts.
CheckResult check_refold(const Layout& layout, const TerrainMesh& mesh,
                         std::vector<Witness>& witnesses);

// Runs all four checks against a mesh rebuilt from the heightfield alone, so
// the certification depends only on the layout data and the input terrain.
// refold is skipped for sheared layouts and when the tree check fails.
// Witnesses are sorted, so reports are deterministic.
VerificationReport verify_layout(const Layout& layout, const Heightfield& hf);

std::string report_to_json(const VerificationReport& report);

}  // namespace terrafold
