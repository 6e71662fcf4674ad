#include "mesh.hpp"

#include <algorithm>
#include <tuple>

namespace terrafold {

const char* kind_name(FaceKind kind) {
  switch (kind) {
    case FaceKind::Base: return "base";
    case FaceKind::Top: return "top";
    case FaceKind::SideLeft: return "side_left";
    case FaceKind::SideRight: return "side_right";
    case FaceKind::Front: return "front";
    case FaceKind::Back: return "back";
    case FaceKind::WallYZ: return "wall_yz";
    case FaceKind::ConnXZ: return "conn_xz";
  }
  return "?";
}

bool parse_kind(std::string_view name, FaceKind& out) {
  static constexpr FaceKind kinds[] = {FaceKind::Base,  FaceKind::Top,    FaceKind::SideLeft,
                                       FaceKind::SideRight, FaceKind::Front, FaceKind::Back,
                                       FaceKind::WallYZ, FaceKind::ConnXZ};
  for (FaceKind k : kinds) {
    if (name == kind_name(k)) {
      out = k;
      return true;
    }
  }
  return false;
}

std::string face_id(FaceKind kind, size_t i, size_t j) {
  switch (kind) {
    case FaceKind::Base: return "base";
    case FaceKind::Top: return "top_" + std::to_string(i) + "_" + std::to_string(j);
    case FaceKind::SideLeft: return "side_left_" + std::to_string(i);
    case FaceKind::SideRight: return "side_right_" + std::to_string(i);
    case FaceKind::Front: return "front_" + std::to_string(j);
    case FaceKind::Back: return "back_" + std::to_string(j);
    case FaceKind::WallYZ: return "wall_yz_" + std::to_string(i) + "_" + std::to_string(j);
    case FaceKind::ConnXZ: return "conn_xz_" + std::to_string(i) + "_" + std::to_string(j);
  }
  return "?";
}

std::array<Vec3, 4> Face::corners() const {
  // (u, v) corners in-plane, lifted back to 3D around `axis`.
  const Rat us[4] = {u0, u1, u1, u0};
  const Rat vs[4] = {v0, v0, v1, v1};
  std::array<Vec3, 4> out;
  for (int k = 0; k < 4; ++k) {
    switch (axis) {
      case 0: out[k] = Vec3{plane, us[k], vs[k]}; break;  // u = y, v = z
      case 1: out[k] = Vec3{us[k], plane, vs[k]}; break;  // u = x, v = z
      default: out[k] = Vec3{us[k], vs[k], plane}; break; // u = x, v = y
    }
  }
  return out;
}

Vec3 Face::outward_area_vector() const {
  Rat a = area() * normal_sign;
  switch (axis) {
    case 0: return Vec3{a, 0, 0};
    case 1: return Vec3{0, a, 0};
    default: return Vec3{0, 0, a};
  }
}

const Face* TerrainMesh::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &faces[it->second];
}

const Face& TerrainMesh::at(const std::string& id) const {
  const Face* f = find(id);
  if (!f) throw ParseError(ErrorCode::InvalidArgument, "no face '" + id + "' in the mesh");
  return *f;
}

const std::vector<Segment3>* TerrainMesh::shared_edges(const std::string& a,
                                                       const std::string& b) const {
  auto ia = index_.find(a);
  auto ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end()) return nullptr;
  auto key = std::minmax(ia->second, ib->second);
  auto it = adjacency.find({key.first, key.second});
  return it == adjacency.end() ? nullptr : &it->second;
}

namespace {

struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};

// A face boundary edge: axis-parallel segment along `dir` on the line fixed
// by the two remaining coordinates (in increasing axis order).
struct EdgeLineKey {
  int dir;
  Rat f1, f2;
  bool operator<(const EdgeLineKey& o) const {
    if (dir != o.dir) return dir < o.dir;
    int c = cmp(f1, o.f1);
    if (c != 0) return c < 0;
    return cmp(f2, o.f2) < 0;
  }
};

struct EdgeOnLine {
  size_t face;
  Rat t0, t1;  // interval along `dir`
};

Vec3 line_point(const EdgeLineKey& key, const Rat& t) {
  switch (key.dir) {
    case 0: return Vec3{t, key.f1, key.f2};
    case 1: return Vec3{key.f1, t, key.f2};
    default: return Vec3{key.f1, key.f2, t};
  }
}

void add_face_edges(std::map<EdgeLineKey, std::vector<EdgeOnLine>>& lines, size_t idx,
                    const Face& f) {
  // Axes spanned by the face, in increasing order.
  int ua = f.axis == 0 ? 1 : 0;
  int va = f.axis == 2 ? 1 : 2;
  auto add = [&](int dir, const Rat& other_fixed, const Rat& t0, const Rat& t1) {
    // Fixed coordinates in increasing axis order: the face plane plus the
    // pinned extent on the non-dir in-plane axis.
    int other = dir == ua ? va : ua;
    EdgeLineKey key;
    key.dir = dir;
    if (f.axis < other) {
      key.f1 = f.plane;
      key.f2 = other_fixed;
    } else {
      key.f1 = other_fixed;
      key.f2 = f.plane;
    }
    lines[key].push_back({idx, t0, t1});
  };
  // Two edges along ua (at v0 and v1), two along va (at u0 and u1).
  add(ua, f.v0, f.u0, f.u1);
  add(ua, f.v1, f.u0, f.u1);
  add(va, f.u0, f.v0, f.v1);
  add(va, f.u1, f.v0, f.v1);
}

}  // namespace

TerrainMesh build_mesh(const Heightfield& hf) {
  TerrainMesh mesh;
  mesh.hf = hf;

  const size_t m = hf.rows, n = hf.cols;
  const auto xs = hf.col_edges();
  const auto ys = hf.row_edges();
  const Rat W = xs[n], D = ys[m];

  auto push = [&](FaceKind kind, size_t i, size_t j, int axis, Rat plane, Rat u0, Rat u1,
                  Rat v0, Rat v1, int sign) {
    Face f;
    f.id = face_id(kind, i, j);
    f.kind = kind;
    f.row = i;
    f.col = j;
    f.axis = axis;
    f.plane = std::move(plane);
    f.u0 = std::move(u0);
    f.u1 = std::move(u1);
    f.v0 = std::move(v0);
    f.v1 = std::move(v1);
    f.normal_sign = sign;
    mesh.index_.emplace(f.id, mesh.faces.size());
    mesh.faces.push_back(std::move(f));
  };

  // Base and the outer ring.
  push(FaceKind::Base, 0, 0, 2, Rat(0), Rat(0), W, Rat(0), D, -1);
  for (size_t j = 0; j < n; ++j)
    push(FaceKind::Front, 0, j, 1, Rat(0), xs[j], xs[j + 1], Rat(0), hf.height(0, j), -1);
  for (size_t i = 0; i < m; ++i)
    push(FaceKind::SideLeft, i, 0, 0, Rat(0), ys[i], ys[i + 1], Rat(0), hf.height(i, 0), -1);
  for (size_t i = 0; i < m; ++i)
    push(FaceKind::SideRight, i, 0, 0, W, ys[i], ys[i + 1], Rat(0), hf.height(i, n - 1), 1);
  for (size_t j = 0; j < n; ++j)
    push(FaceKind::Back, 0, j, 1, D, xs[j], xs[j + 1], Rat(0), hf.height(m - 1, j), 1);

  // Tops and walls row by row, then the row-to-row connectors after each row,
  // matching the order faces are laid out in the plane.
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) {
      push(FaceKind::Top, i, j, 2, hf.height(i, j), xs[j], xs[j + 1], ys[i], ys[i + 1], 1);
      if (j + 1 < n && hf.height(i, j) != hf.height(i, j + 1)) {
        const Rat &a = hf.height(i, j), &b = hf.height(i, j + 1);
        push(FaceKind::WallYZ, i, j, 0, xs[j + 1], ys[i], ys[i + 1], std::min(a, b),
             std::max(a, b), a > b ? 1 : -1);
      }
    }
    if (i + 1 < m) {
      for (size_t j = 0; j < n; ++j) {
        const Rat &a = hf.height(i, j), &b = hf.height(i + 1, j);
        if (a != b)
          push(FaceKind::ConnXZ, i, j, 1, ys[i + 1], xs[j], xs[j + 1], std::min(a, b),
               std::max(a, b), a > b ? 1 : -1);
      }
    }
  }

  // Shared edges: sweep every carrier line and record pairwise overlaps.
  std::map<EdgeLineKey, std::vector<EdgeOnLine>> lines;
  for (size_t idx = 0; idx < mesh.faces.size(); ++idx)
    add_face_edges(lines, idx, mesh.faces[idx]);

  for (const auto& [key, edges] : lines) {
    for (size_t a = 0; a < edges.size(); ++a) {
      for (size_t b = a + 1; b < edges.size(); ++b) {
        if (edges[a].face == edges[b].face) continue;
        Rat lo = std::max(edges[a].t0, edges[b].t0, RatLess{});
        Rat hi = std::min(edges[a].t1, edges[b].t1, RatLess{});
        if (lo < hi) {
          auto pk = std::minmax(edges[a].face, edges[b].face);
          mesh.adjacency[{pk.first, pk.second}].push_back(
              Segment3{line_point(key, lo), line_point(key, hi)});
        }
      }
    }
  }

  return mesh;
}

Rat surface_area(const TerrainMesh& mesh) {
  Rat total = 0;
  for (const Face& f : mesh.faces) total += f.area();
  return total;
}

}  // namespace terrafold
