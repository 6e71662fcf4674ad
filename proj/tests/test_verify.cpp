#include <doctest.h>

#include <algorithm>

#include "layout_json.hpp"
#include "test_util.hpp"
#include "verify.hpp"

using namespace terrafold;
using terrafold::testutil::hf_of;
using terrafold::testutil::rat;

namespace {

PlacedFace square_face(const std::string& id, const Rat& x0, const Rat& y0, const Rat& side) {
  PlacedFace f;
  f.id = id;
  f.kind = FaceKind::Top;
  f.poly = {{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}};
  return f;
}

PlacedFace* find_mut(Layout& layout, const std::string& id) {
  for (PlacedFace& f : layout.faces)
    if (f.id == id) return &f;
  return nullptr;
}

void translate(PlacedFace& f, const Rat& dx, const Rat& dy) {
  for (Vec2& v : f.poly) {
    v.x += dx;
    v.y += dy;
  }
  if (f.fold_edge) {
    f.fold_edge->a.x += dx;
    f.fold_edge->a.y += dy;
    f.fold_edge->b.x += dx;
    f.fold_edge->b.y += dy;
  }
}

}  // namespace

TEST_CASE("weak simplicity: touching is allowed, overlap is not") {
  Layout layout;
  layout.faces.push_back(square_face("a", 0, 0, 1));

  SUBCASE("edge-sharing squares pass") {
    layout.faces.push_back(square_face("b", 1, 0, 1));
    std::vector<Witness> ws;
    CHECK(check_weak_simplicity(layout, ws).status == CheckStatus::Pass);
    CHECK(ws.empty());
  }
  SUBCASE("half-offset squares fail with the centroid witness") {
    layout.faces.push_back(square_face("b", rat("1/2"), rat("1/2"), 1));
    std::vector<Witness> ws;
    CHECK(check_weak_simplicity(layout, ws).status == CheckStatus::Fail);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].kind == "interior_overlap");
    CHECK(ws[0].faces == std::vector<std::string>{"a", "b"});
    REQUIRE(ws[0].point.has_value());
    CHECK(ws[0].point->x == rat("3/4"));
    CHECK(ws[0].point->y == rat("3/4"));
  }
  SUBCASE("zero-area face fails as degenerate") {
    PlacedFace flat;
    flat.id = "flat";
    flat.kind = FaceKind::Top;
    flat.poly = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
    layout.faces.push_back(flat);
    std::vector<Witness> ws;
    CHECK(check_weak_simplicity(layout, ws).status == CheckStatus::Fail);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].kind == "degenerate_face");
    CHECK(ws[0].faces == std::vector<std::string>{"flat"});
  }
}

TEST_CASE("area check: exact conservation") {
  Heightfield hf = hf_of({{2}});
  TerrainMesh mesh = build_mesh(hf);
  Layout layout = compute_layout(mesh);

  std::vector<Witness> ws;
  CHECK(check_area(layout, mesh, ws).status == CheckStatus::Pass);
  CHECK(surface_area(mesh) == Rat(10));

  SUBCASE("deleting a face is caught, off by exactly its area") {
    Layout broken = layout;
    broken.faces.erase(std::remove_if(broken.faces.begin(), broken.faces.end(),
                                      [](const PlacedFace& f) { return f.id == "side_left_0"; }),
                       broken.faces.end());
    std::vector<Witness> ws2;
    CheckResult r = check_area(broken, mesh, ws2);
    CHECK(r.status == CheckStatus::Fail);
    REQUIRE(ws2.size() == 1);
    // 10 total, minus the 2-area side face.
    CHECK(ws2[0].detail == "layout total 8 != surface total 10");
  }
}

TEST_CASE("tree check: spanning tree with sound fold edges") {
  Heightfield hf = hf_of({{2}});
  TerrainMesh mesh = build_mesh(hf);
  Layout layout = compute_layout(mesh);

  std::vector<Witness> ws;
  CheckResult r = check_tree(layout, mesh, ws);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.detail == "5 fold edges over 6 faces");

  SUBCASE("reparenting to a non-adjacent face fails") {
    Layout broken = layout;
    find_mut(broken, "front_0")->parent = "back_0";
    std::vector<Witness> ws2;
    CHECK(check_tree(broken, mesh, ws2).status == CheckStatus::Fail);
    bool saw = false;
    for (const Witness& w : ws2)
      if (w.kind == "not_adjacent" || w.kind == "fold_edge_off_boundary") saw = true;
    CHECK(saw);
  }
  SUBCASE("duplicated face fails") {
    Layout broken = layout;
    broken.faces.push_back(*layout.find("front_0"));
    std::vector<Witness> ws2;
    CHECK(check_tree(broken, mesh, ws2).status == CheckStatus::Fail);
    CHECK(ws2.front().kind == "duplicate_face");
  }
  SUBCASE("missing face fails") {
    Layout broken = layout;
    broken.faces.pop_back();
    std::vector<Witness> ws2;
    CHECK(check_tree(broken, mesh, ws2).status == CheckStatus::Fail);
  }
  SUBCASE("cycle among parents fails") {
    TerrainMesh mesh2 = build_mesh(hf_of({{1, 2}}));
    Layout cyc = compute_layout(mesh2);
    // top_0_0 <- wall_yz_0_0 <- top_0_1 is the strip chain; close a loop.
    find_mut(cyc, "top_0_1")->parent = "wall_yz_0_0";
    find_mut(cyc, "wall_yz_0_0")->parent = "top_0_1";
    std::vector<Witness> ws2;
    CHECK(check_tree(cyc, mesh2, ws2).status == CheckStatus::Fail);
    bool saw_cycle = false;
    for (const Witness& w : ws2)
      if (w.kind == "cycle") saw_cycle = true;
    CHECK(saw_cycle);
  }
  SUBCASE("fold edge off the parent boundary fails") {
    Layout broken = layout;
    translate(*find_mut(broken, "back_0"), Rat(1), Rat(0));  // slides off the 1-wide base edge
    std::vector<Witness> ws2;
    CHECK(check_tree(broken, mesh, ws2).status == CheckStatus::Fail);
  }
}

TEST_CASE("refold: the inverse isometry oracle") {
  SUBCASE("1x1 net refolds with six exact matches") {
    Heightfield hf = hf_of({{2}});
    Layout layout = compute_layout(build_mesh(hf));
    TerrainMesh mesh = build_mesh(hf);
    std::vector<Witness> ws;
    CheckResult r = check_refold(layout, mesh, ws);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.detail == "6 faces refold exactly");
  }
  SUBCASE("translated face fails at that face") {
    Heightfield hf = hf_of({{1, 1}});
    TerrainMesh mesh = build_mesh(hf);
    Layout layout = compute_layout(mesh);
    translate(*find_mut(layout, "back_0"), Rat(1), Rat(0));
    std::vector<Witness> ws;
    CHECK(check_refold(layout, mesh, ws).status == CheckStatus::Fail);
    REQUIRE_FALSE(ws.empty());
    CHECK(ws.front().faces == std::vector<std::string>{"back_0"});
    CHECK(ws.front().kind == "vertex_mismatch");
  }
  SUBCASE("swapping two congruent faces passes tree but fails refold") {
    Heightfield hf = hf_of({{1, 1}});
    TerrainMesh mesh = build_mesh(hf);
    Layout layout = compute_layout(mesh);
    translate(*find_mut(layout, "back_0"), Rat(1), Rat(0));
    translate(*find_mut(layout, "back_1"), Rat(-1), Rat(0));
    std::vector<Witness> tree_ws;
    CHECK(check_tree(layout, mesh, tree_ws).status == CheckStatus::Pass);
    std::vector<Witness> ws;
    CHECK(check_refold(layout, mesh, ws).status == CheckStatus::Fail);
    CHECK(ws.size() == 2);
  }
}

TEST_CASE("full verification passes on unfoldings of random terrains") {
  SplitMix64 rng(17);
  for (int k = 0; k < 20; ++k) {
    Heightfield hf = testutil::random_hf(rng, 6, 5, k % 2 == 0);
    CAPTURE(to_csv(hf));
    Layout layout = compute_layout(build_mesh(hf));
    VerificationReport report = verify_layout(layout, hf);
    CHECK(report.all_passed());
    CHECK(report.witnesses.empty());
    CHECK(report.checks.at("refold").status == CheckStatus::Pass);
  }
}

TEST_CASE("verification consumes the serialized record faithfully") {
  Heightfield hf = hf_of({{1, 3, 2}, {2, 1, 2}});
  Layout layout = compute_layout(build_mesh(hf));
  Layout reparsed = layout_from_json(layout_to_json(layout));
  VerificationReport report = verify_layout(reparsed, hf);
  CHECK(report.all_passed());
}

TEST_CASE("report JSON shape and exit semantics") {
  Heightfield hf = hf_of({{1}});
  Layout layout = compute_layout(build_mesh(hf));
  VerificationReport report = verify_layout(layout, hf);
  std::string json = report_to_json(report);
  CHECK(json.find("\"weak_simplicity\"") != std::string::npos);
  CHECK(json.find("\"area\"") != std::string::npos);
  CHECK(json.find("\"tree\"") != std::string::npos);
  CHECK(json.find("\"refold\"") != std::string::npos);
  CHECK(json.find("\"all_passed\": true") != std::string::npos);
}
