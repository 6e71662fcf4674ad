#include "geometry.hpp"

#include <algorithm>

namespace terrafold {

Rat orient(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rat signed_area2(const Polygon2& poly) {
  Rat acc = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc;
}

bool is_convex_ccw(const Polygon2& poly) {
  const size_t n = poly.size();
  if (n < 3) return false;
  if (signed_area2(poly) <= 0) return false;
  for (size_t i = 0; i < n; ++i) {
    if (orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) < 0) return false;
  }
  return true;
}

Polygon2 ensure_ccw(Polygon2 poly) {
  if (poly.size() >= 3 && signed_area2(poly) < 0) std::reverse(poly.begin(), poly.end());
  return poly;
}

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (orient(a, b, p) != 0) return false;
  if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x)) return false;
  if (p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y)) return false;
  return true;
}

namespace {

// Intersection of segment pq with the infinite line ab. Pre: pq straddles the
// line, so the denominator is nonzero.
Vec2 line_intersect(const Vec2& p, const Vec2& q, const Vec2& a, const Vec2& b) {
  Rat sp = orient(a, b, p);
  Rat sq = orient(a, b, q);
  Rat t = sp / (sp - sq);
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

}  // namespace

Polygon2 convex_intersection(const Polygon2& subject, const Polygon2& clip) {
  Polygon2 out = subject;
  const size_t nc = clip.size();
  for (size_t i = 0; i < nc && !out.empty(); ++i) {
    const Vec2& a = clip[i];
    const Vec2& b = clip[(i + 1) % nc];
    if (a == b) continue;  // degenerate clip edge contributes no constraint
    Polygon2 in;
    in.swap(out);
    const size_t n = in.size();
    for (size_t k = 0; k < n; ++k) {
      const Vec2& p = in[k];
      const Vec2& q = in[(k + 1) % n];
      Rat sp = orient(a, b, p);
      Rat sq = orient(a, b, q);
      if (sp >= 0) {
        out.push_back(p);
        if (sq < 0) out.push_back(line_intersect(p, q, a, b));
      } else if (sq >= 0) {
        out.push_back(line_intersect(p, q, a, b));
      }
    }
  }
  return out;
}

Vec2 polygon_centroid(const Polygon2& poly) {
  Rat a2 = 0;
  Rat cx = 0, cy = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    Rat w = p.x * q.y - q.x * p.y;
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  // a2 = 2*signed area; centroid = sum / (6 * signed area) = sum / (3 * a2)
  return {cx / (3 * a2), cy / (3 * a2)};
}

Box2 bounding_box(const Polygon2& poly) {
  Box2 box{poly[0].x, poly[0].y, poly[0].x, poly[0].y};
  for (const Vec2& v : poly) {
    if (v.x < box.xmin) box.xmin = v.x;
    if (v.y < box.ymin) box.ymin = v.y;
    if (v.x > box.xmax) box.xmax = v.x;
    if (v.y > box.ymax) box.ymax = v.y;
  }
  return box;
}

bool boxes_interior_overlap(const Box2& a, const Box2& b) {
  return a.xmin < b.xmax && b.xmin < a.xmax && a.ymin < b.ymax && b.ymin < a.ymax;
}

Contact classify_contact(const Polygon2& a, const Polygon2& b) {
  Contact contact;
  Polygon2 inter = convex_intersection(a, b);
  if (inter.empty()) return contact;

  Rat area = polygon_area(inter);
  if (area > 0) {
    contact.kind = ContactKind::Overlap;
    contact.area = area;
    contact.interior_point = polygon_centroid(inter);
    return contact;
  }

  // Zero area: the contact is a point or a segment of the shared boundary.
  bool spread = false;
  for (size_t i = 1; i < inter.size() && !spread; ++i)
    if (!(inter[i] == inter[0])) spread = true;
  contact.kind = spread ? ContactKind::Segment : ContactKind::Point;
  return contact;
}

}  // namespace terrafold
