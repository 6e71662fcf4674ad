#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace terrafold {

struct Vec2 {
  Rat x, y;
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
};

struct Vec3 {
  Rat x, y, z;
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Vec3 scale(const Vec3& v, const Rat& s) { return {v.x * s, v.y * s, v.z * s}; }

struct Segment2 {
  Vec2 a, b;
  Rat length_sq() const { return dot(b - a, b - a); }
  bool operator==(const Segment2& o) const { return a == o.a && b == o.b; }
};

struct Segment3 {
  Vec3 a, b;
  Rat length_sq() const { return dot(b - a, b - a); }
};

// Vertices in order; the functions below that require convexity say so.
using Polygon2 = std::vector<Vec2>;

// Cross product (a-o) x (b-o): > 0 for a left turn.
Rat orient(const Vec2& o, const Vec2& a, const Vec2& b);

// Twice the signed area (shoelace); positive for counterclockwise order.
Rat signed_area2(const Polygon2& poly);

inline Rat polygon_area(const Polygon2& poly) {
  Rat a2 = signed_area2(poly);
  if (a2 < 0) a2 = -a2;
  return a2 / 2;
}

// True if the polygon is convex with counterclockwise orientation. Collinear
// (zero-turn) vertices are tolerated; a zero-area polygon is not convex.
bool is_convex_ccw(const Polygon2& poly);

// Reverses the vertex order when the signed area is negative.
Polygon2 ensure_ccw(Polygon2 poly);

// Closed-segment membership, exact.
bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Exact intersection of convex polygons (Sutherland-Hodgman clipping of
// `subject` against the edges of `clip`). Both must be convex and
// counterclockwise. The result may contain repeated/collinear vertices; callers
// interpret it through polygon_area / vertex inspection.
Polygon2 convex_intersection(const Polygon2& subject, const Polygon2& clip);

// Area centroid. Pre: polygon_area(poly) > 0.
Vec2 polygon_centroid(const Polygon2& poly);

struct Box2 {
  Rat xmin, ymin, xmax, ymax;
};
Box2 bounding_box(const Polygon2& poly);

// Open-interval overlap in both axes; a pair failing this cannot have
// overlapping interiors.
bool boxes_interior_overlap(const Box2& a, const Box2& b);

enum class ContactKind { Disjoint, Point, Segment, Overlap };

struct Contact {
  ContactKind kind = ContactKind::Disjoint;
  Rat area;                           // positive only for Overlap
  std::optional<Vec2> interior_point; // centroid of the overlap region
};

// Classifies how two convex CCW polygons meet: disjoint, a single boundary
// point, a positive-length boundary segment, or an interior overlap of
// positive area. Exact in every case.
Contact classify_contact(const Polygon2& a, const Polygon2& b);

}  // namespace terrafold
