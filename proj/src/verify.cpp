#include "verify.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace terrafold {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  for (const auto& [name, result] : checks)
    if (result.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

Witness make_witness(std::string check, std::string kind, std::vector<std::string> faces,
                     std::optional<Vec2> point = std::nullopt, std::string detail = {}) {
  Witness w;
  w.check = std::move(check);
  w.kind = std::move(kind);
  w.faces = std::move(faces);
  w.point = std::move(point);
  w.detail = std::move(detail);
  return w;
}

}  // namespace

CheckResult check_weak_simplicity(const Layout& layout, std::vector<Witness>& witnesses) {
  CheckResult result;
  const size_t n = layout.faces.size();

  std::vector<Polygon2> polys(n);
  std::vector<Box2> boxes(n);
  std::vector<bool> usable(n, false);
  for (size_t i = 0; i < n; ++i) {
    const PlacedFace& f = layout.faces[i];
    Polygon2 p = ensure_ccw(f.poly);
    if (!is_convex_ccw(p)) {
      witnesses.push_back(make_witness("weak_simplicity", "degenerate_face", {f.id}, std::nullopt,
                                       "placed polygon is not a convex region of positive area"));
      result.status = CheckStatus::Fail;
      continue;
    }
    boxes[i] = bounding_box(p);
    polys[i] = std::move(p);
    usable[i] = true;
  }

  size_t overlaps = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!usable[i]) continue;
    for (size_t k = i + 1; k < n; ++k) {
      if (!usable[k]) continue;
      if (!boxes_interior_overlap(boxes[i], boxes[k])) continue;
      Contact contact = classify_contact(polys[i], polys[k]);
      if (contact.kind == ContactKind::Overlap) {
        witnesses.push_back(make_witness(
            "weak_simplicity", "interior_overlap", {layout.faces[i].id, layout.faces[k].id},
            contact.interior_point, "shared interior area " + to_string(contact.area)));
        result.status = CheckStatus::Fail;
        ++overlaps;
      }
    }
  }

  if (result.status == CheckStatus::Fail)
    result.detail = std::to_string(overlaps) + " interior overlap(s)";
  return result;
}

CheckResult check_area(const Layout& layout, const TerrainMesh& mesh,
                       std::vector<Witness>& witnesses) {
  CheckResult result;
  Rat placed_total = 0;
  for (const PlacedFace& f : layout.faces) placed_total += polygon_area(f.poly);
  Rat mesh_total = surface_area(mesh);
  if (placed_total != mesh_total) {
    result.status = CheckStatus::Fail;
    result.detail =
        "layout total " + to_string(placed_total) + " != surface total " + to_string(mesh_total);
    witnesses.push_back(make_witness("area", "area_mismatch", {}, std::nullopt, result.detail));
  } else {
    result.detail = "total " + to_string(mesh_total);
  }
  return result;
}

namespace {

// Does the closed segment [a,b] lie within a single boundary edge of poly?
bool segment_on_boundary(const Segment2& seg, const Polygon2& poly) {
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    if (point_on_segment(seg.a, p, q) && point_on_segment(seg.b, p, q)) return true;
  }
  return false;
}

}  // namespace

CheckResult check_tree(const Layout& layout, const TerrainMesh& mesh,
                       std::vector<Witness>& witnesses) {
  CheckResult result;
  auto fail = [&](Witness w) {
    witnesses.push_back(std::move(w));
    result.status = CheckStatus::Fail;
  };

  // Face sets must agree, with no duplicates.
  std::map<std::string, size_t> seen;
  for (const PlacedFace& f : layout.faces) ++seen[f.id];
  for (const auto& [id, count] : seen) {
    if (count > 1)
      fail(make_witness("tree", "duplicate_face", {id}, std::nullopt,
                        "face placed " + std::to_string(count) + " times"));
    if (!mesh.find(id))
      fail(make_witness("tree", "unknown_face", {id}, std::nullopt, "face is not in the mesh"));
  }
  for (const Face& f : mesh.faces)
    if (!seen.count(f.id))
      fail(make_witness("tree", "missing_face", {f.id}, std::nullopt, "face was never placed"));
  if (result.status == CheckStatus::Fail) return result;

  // Exactly one root, and it is the base.
  std::vector<const PlacedFace*> roots;
  for (const PlacedFace& f : layout.faces)
    if (!f.parent) roots.push_back(&f);
  if (roots.size() != 1 || roots[0]->id != "base") {
    std::vector<std::string> ids;
    for (auto* r : roots) ids.push_back(r->id);
    fail(make_witness("tree", "bad_root", ids, std::nullopt,
                      "expected the base as the unique unparented face"));
    return result;
  }

  // Parent links must reach the root without cycles.
  std::map<std::string, const PlacedFace*> by_id;
  for (const PlacedFace& f : layout.faces) by_id[f.id] = &f;
  std::map<std::string, int> state;  // 0 unvisited, 1 in progress, 2 done
  for (const PlacedFace& f : layout.faces) {
    std::vector<std::string> chain;
    const PlacedFace* cur = &f;
    while (cur && state[cur->id] == 0) {
      state[cur->id] = 1;
      chain.push_back(cur->id);
      if (!cur->parent) {
        cur = nullptr;
        break;
      }
      auto it = by_id.find(*cur->parent);
      if (it == by_id.end()) {
        fail(make_witness("tree", "missing_parent", {cur->id, *cur->parent}, std::nullopt,
                          "parent face is not placed"));
        cur = nullptr;
        break;
      }
      cur = it->second;
    }
    if (cur && state[cur->id] == 1) {
      fail(make_witness("tree", "cycle", {cur->id}, std::nullopt,
                        "parent links loop back through this face"));
      for (const std::string& id : chain) state[id] = 2;
      return result;
    }
    for (const std::string& id : chain) state[id] = 2;
  }

  // Fold edges: positive length, on both boundaries, across a shared mesh
  // edge of exactly the same length.
  size_t fold_count = 0;
  for (const PlacedFace& f : layout.faces) {
    if (!f.parent) continue;
    if (!f.fold_edge) {
      fail(make_witness("tree", "missing_fold_edge", {f.id}));
      continue;
    }
    const Segment2& fold = *f.fold_edge;
    Rat len_sq = fold.length_sq();
    if (len_sq == 0) {
      fail(make_witness("tree", "zero_fold_edge", {f.id}, std::nullopt,
                        "fold edge has zero length"));
      continue;
    }
    auto pit = by_id.find(*f.parent);
    if (pit == by_id.end()) continue;  // already reported as missing_parent
    const PlacedFace& parent = *pit->second;
    if (!segment_on_boundary(fold, f.poly) || !segment_on_boundary(fold, parent.poly)) {
      fail(make_witness("tree", "fold_edge_off_boundary", {f.id, parent.id}, std::nullopt,
                        "fold edge does not lie on both placed boundaries"));
      continue;
    }
    const std::vector<Segment3>* shared = mesh.shared_edges(f.id, parent.id);
    if (!shared) {
      fail(make_witness("tree", "not_adjacent", {f.id, parent.id}, std::nullopt,
                        "fold edge is not a shared mesh edge"));
      continue;
    }
    bool length_ok = false;
    for (const Segment3& s : *shared)
      if (s.length_sq() == len_sq) length_ok = true;
    if (!length_ok) {
      fail(make_witness("tree", "fold_length_mismatch", {f.id, parent.id}, std::nullopt,
                        "planar fold length differs from the shared 3D edge"));
      continue;
    }
    ++fold_count;
  }

  if (result.status == CheckStatus::Pass)
    result.detail = std::to_string(fold_count) + " fold edges over " +
                    std::to_string(layout.faces.size()) + " faces";
  return result;
}

namespace {

// Rigid pose of a face: planar (x, y) maps to origin + x*ex + y*ey. For
// axis-aligned layouts ex/ey are signed unit axis vectors, so everything
// stays rational.
struct Pose {
  Vec3 origin, ex, ey;
  Vec3 apply(const Vec2& v) const { return origin + scale(ex, v.x) + scale(ey, v.y); }
};

bool vertex_sets_match(const Polygon2& poly, const Pose& pose, const std::array<Vec3, 4>& corners,
                       Vec2* bad) {
  if (poly.size() != 4) {
    if (bad && !poly.empty()) *bad = poly[0];
    return false;
  }
  std::array<bool, 4> used{};
  for (const Vec2& v : poly) {
    Vec3 p = pose.apply(v);
    bool found = false;
    for (size_t k = 0; k < 4; ++k) {
      if (!used[k] && corners[k] == p) {
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) {
      if (bad) *bad = v;
      return false;
    }
  }
  return true;
}

Vec3 axis_unit(int axis) {
  switch (axis) {
    case 0: return {1, 0, 0};
    case 1: return {0, 1, 0};
    default: return {0, 0, 1};
  }
}

}  // namespace

CheckResult check_refold(const Layout& layout, const TerrainMesh& mesh,
                         std::vector<Witness>& witnesses) {
  CheckResult result;
  auto fail = [&](Witness w) {
    witnesses.push_back(std::move(w));
    result.status = CheckStatus::Fail;
  };

  std::map<std::string, const PlacedFace*> by_id;
  std::map<std::string, std::vector<const PlacedFace*>> children;
  const PlacedFace* root = nullptr;
  for (const PlacedFace& f : layout.faces) {
    by_id[f.id] = &f;
    if (f.parent)
      children[*f.parent].push_back(&f);
    else
      root = &f;
  }
  for (auto& [id, kids] : children)
    std::sort(kids.begin(), kids.end(),
              [](const PlacedFace* a, const PlacedFace* b) { return a->id < b->id; });

  // The layout convention pins the root: the flipped base occupies
  // [0,W] x [-D,0], i.e. (x, y) -> (x, -y, 0). Checked, not assumed.
  Pose root_pose{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, -1, 0}};
  Vec2 bad;
  if (!root || !vertex_sets_match(root->poly, root_pose, mesh.at(root->id).corners(), &bad)) {
    fail(make_witness("refold", "vertex_mismatch", {root ? root->id : "?"},
                      root ? std::optional<Vec2>(bad) : std::nullopt,
                      "base does not refold onto the 3D base rectangle"));
    return result;
  }

  size_t matched = 1;
  std::vector<std::pair<const PlacedFace*, Pose>> stack{{root, root_pose}};
  while (!stack.empty()) {
    auto [face, pose] = stack.back();
    stack.pop_back();
    auto kit = children.find(face->id);
    if (kit == children.end()) continue;
    for (const PlacedFace* child : kit->second) {
      if (!child->fold_edge || child->fold_edge->length_sq() == 0) {
        fail(make_witness("refold", "missing_fold_edge", {child->id}));
        continue;
      }
      const Segment2& fold = *child->fold_edge;
      const Face& target = mesh.at(child->id);

      // Fold direction in the plane and in space; the child pose must agree
      // with the parent pose along the fold line.
      Vec2 u = fold.b - fold.a;
      Vec3 pa = pose.apply(fold.a);
      Vec3 U = pose.apply(fold.b) - pa;
      Vec3 n = axis_unit(target.axis);
      if (dot(n, U) != 0) {
        fail(make_witness("refold", "fold_out_of_plane", {child->id}, std::nullopt,
                          "fold edge cannot lie in the face's 3D plane"));
        continue;
      }
      Rat uu = dot(u, u);

      // Perpendicular planar direction w (same length as u) maps to one of
      // the two in-plane directions perpendicular to U.
      Vec2 w{-u.y, u.x};
      Vec3 W = cross(n, U);

      bool ok = false;
      for (int sign : {1, -1}) {
        Vec3 Ws = scale(W, Rat(sign));
        // Linear part: v -> (v.u)/|u|^2 * U + (v.w)/|w|^2 * Ws, |w|^2 = |u|^2.
        Pose cand;
        cand.ex = scale(U, u.x / uu) + scale(Ws, w.x / uu);
        cand.ey = scale(U, u.y / uu) + scale(Ws, w.y / uu);
        cand.origin = pa - scale(cand.ex, fold.a.x) - scale(cand.ey, fold.a.y);
        if (vertex_sets_match(child->poly, cand, target.corners(), &bad)) {
          stack.emplace_back(child, cand);
          ok = true;
          break;
        }
      }
      if (ok) {
        ++matched;
      } else {
        fail(make_witness("refold", "vertex_mismatch", {child->id}, bad,
                          "face does not refold onto its 3D rectangle"));
      }
    }
  }

  if (result.status == CheckStatus::Pass) {
    if (matched != layout.faces.size()) {
      // Unreachable pieces indicate a broken tree; report rather than pass.
      result.status = CheckStatus::Fail;
      result.detail = "only " + std::to_string(matched) + " of " +
                      std::to_string(layout.faces.size()) + " faces reachable from the base";
      witnesses.push_back(make_witness("refold", "unreachable_faces", {}, std::nullopt,
                                       result.detail));
    } else {
      result.detail = std::to_string(matched) + " faces refold exactly";
    }
  }
  return result;
}

VerificationReport verify_layout(const Layout& layout, const Heightfield& hf) {
  VerificationReport report;
  TerrainMesh mesh = build_mesh(hf);

  report.checks["weak_simplicity"] = check_weak_simplicity(layout, report.witnesses);
  report.checks["area"] = check_area(layout, mesh, report.witnesses);
  CheckResult tree = check_tree(layout, mesh, report.witnesses);
  report.checks["tree"] = tree;

  if (layout.sheared) {
    report.checks["refold"] = {CheckStatus::Skipped, "sheared mode is not an isometry"};
  } else if (tree.status == CheckStatus::Fail) {
    report.checks["refold"] = {CheckStatus::Skipped, "tree check failed"};
  } else {
    report.checks["refold"] = check_refold(layout, mesh, report.witnesses);
  }

  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [](const Witness& a, const Witness& b) {
              if (a.check != b.check) return a.check < b.check;
              if (a.faces != b.faces) return a.faces < b.faces;
              return a.kind < b.kind;
            });
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  auto& checks = doc["checks"] = nlohmann::ordered_json::object();
  for (const char* name : {"weak_simplicity", "area", "tree", "refold"}) {
    auto it = report.checks.find(name);
    if (it == report.checks.end()) continue;
    nlohmann::ordered_json c;
    c["status"] = check_status_name(it->second.status);
    if (!it->second.detail.empty()) c["detail"] = it->second.detail;
    checks[name] = std::move(c);
  }
  auto& ws = doc["witnesses"] = nlohmann::ordered_json::array();
  for (const Witness& w : report.witnesses) {
    nlohmann::ordered_json jw;
    jw["check"] = w.check;
    jw["kind"] = w.kind;
    jw["faces"] = w.faces;
    if (w.point) jw["point"] = {to_string(w.point->x), to_string(w.point->y)};
    if (!w.detail.empty()) jw["detail"] = w.detail;
    ws.push_back(std::move(jw));
  }
  doc["all_passed"] = report.all_passed();
  return doc.dump(2) + "\n";
}

}  // namespace terrafold
