#include "layout_json.hpp"

#include <json.hpp>

namespace terrafold {

namespace {

nlohmann::ordered_json point_json(const Vec2& v) {
  return nlohmann::ordered_json::array({to_string(v.x), to_string(v.y)});
}

Rat rational_field(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string())
    throw ParseError(ErrorCode::SyntaxError, "expected a rational string at " + where);
  auto r = parse_rational(v.get<std::string>());
  if (!r)
    throw ParseError(ErrorCode::SyntaxError,
                     "unparsable number '" + v.get<std::string>() + "' at " + where);
  return *r;
}

Vec2 point_field(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2)
    throw ParseError(ErrorCode::SyntaxError, "expected an [x, y] pair at " + where);
  return Vec2{rational_field(v[0], where + "[0]"), rational_field(v[1], where + "[1]")};
}

}  // namespace

std::string layout_to_json(const Layout& layout) {
  nlohmann::ordered_json doc;
  doc["mode"] = layout.sheared ? "sheared" : "orthogonal";
  doc["slope"] = to_string(layout.slope);
  auto& faces = doc["faces"] = nlohmann::ordered_json::array();
  for (const PlacedFace& f : layout.faces) {
    nlohmann::ordered_json jf;
    jf["id"] = f.id;
    jf["kind"] = kind_name(f.kind);
    auto& vs = jf["vertices"] = nlohmann::ordered_json::array();
    for (const Vec2& v : f.poly) vs.push_back(point_json(v));
    jf["parent"] = f.parent ? nlohmann::ordered_json(*f.parent) : nlohmann::ordered_json(nullptr);
    if (f.fold_edge)
      jf["fold_edge"] = nlohmann::ordered_json::array(
          {point_json(f.fold_edge->a), point_json(f.fold_edge->b)});
    else
      jf["fold_edge"] = nullptr;
    faces.push_back(std::move(jf));
  }
  doc["bbox"] = nlohmann::ordered_json::array({to_string(layout.bbox.xmin),
                                               to_string(layout.bbox.ymin),
                                               to_string(layout.bbox.xmax),
                                               to_string(layout.bbox.ymax)});
  return doc.dump(2) + "\n";
}

Layout layout_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ErrorCode::SyntaxError, e.what());
  }
  if (!doc.is_object() || !doc.contains("faces") || !doc["faces"].is_array())
    throw ParseError(ErrorCode::SyntaxError, "expected an object with a \"faces\" array");

  Layout layout;
  std::string mode = doc.value("mode", "orthogonal");
  if (mode == "sheared")
    layout.sheared = true;
  else if (mode != "orthogonal")
    throw ParseError(ErrorCode::SyntaxError, "unknown mode '" + mode + "'");
  layout.slope = doc.contains("slope") ? rational_field(doc["slope"], "slope") : Rat(0);

  size_t idx = 0;
  for (const auto& jf : doc["faces"]) {
    std::string where = "faces[" + std::to_string(idx++) + "]";
    if (!jf.is_object() || !jf.contains("id") || !jf["id"].is_string())
      throw ParseError(ErrorCode::SyntaxError, "missing face id at " + where);
    PlacedFace f;
    f.id = jf["id"].get<std::string>();
    std::string kind = jf.value("kind", "");
    if (!parse_kind(kind, f.kind))
      throw ParseError(ErrorCode::SyntaxError, "unknown face kind '" + kind + "' at " + where);
    if (!jf.contains("vertices") || !jf["vertices"].is_array() || jf["vertices"].size() < 3)
      throw ParseError(ErrorCode::SyntaxError, "expected >= 3 vertices at " + where);
    size_t vi = 0;
    for (const auto& jv : jf["vertices"])
      f.poly.push_back(point_field(jv, where + ".vertices[" + std::to_string(vi++) + "]"));
    if (jf.contains("parent") && !jf["parent"].is_null()) {
      if (!jf["parent"].is_string())
        throw ParseError(ErrorCode::SyntaxError, "parent must be a face id at " + where);
      f.parent = jf["parent"].get<std::string>();
    }
    if (jf.contains("fold_edge") && !jf["fold_edge"].is_null()) {
      const auto& je = jf["fold_edge"];
      if (!je.is_array() || je.size() != 2)
        throw ParseError(ErrorCode::SyntaxError, "fold_edge must be two points at " + where);
      f.fold_edge = Segment2{point_field(je[0], where + ".fold_edge[0]"),
                             point_field(je[1], where + ".fold_edge[1]")};
    }
    layout.faces.push_back(std::move(f));
  }
  layout.recompute_bbox();
  return layout;
}

}  // namespace terrafold
