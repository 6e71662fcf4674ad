#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "geometry.hpp"
#include "heightfield.hpp"

namespace terrafold {

// Face taxonomy of the closed terrain polyhedron.
//
//   Base          the rectangle under everything, z = 0, normal -z
//   Top(i,j)      cell top, z = h[i][j], normal +z
//   SideLeft(i)   x = 0 face of row i, normal -x
//   SideRight(i)  x = W face of row i, normal +x
//   Front(j)      y = 0 face of column j, normal -y
//   Back(j)       y = D face of column j, normal +y
//   WallYZ(i,j)   step between columns j and j+1 inside row i, plane x = col edge j+1
//   ConnXZ(i,j)   step between rows i and i+1 inside column j, plane y = row edge i+1
enum class FaceKind { Base, Top, SideLeft, SideRight, Front, Back, WallYZ, ConnXZ };

const char* kind_name(FaceKind kind);
bool parse_kind(std::string_view name, FaceKind& out);

// Stable, human-readable face identifier, e.g. "top_2_3", "wall_yz_0_1".
std::string face_id(FaceKind kind, size_t i, size_t j);

// An axis-aligned rectangle on the surface: `axis` is the normal direction
// (0 = x, 1 = y, 2 = z), `plane` the coordinate along it, and [u0,u1] x [v0,v1]
// the extents along the remaining two axes in increasing axis order.
struct Face {
  std::string id;
  FaceKind kind;
  size_t row = 0;  // i index where applicable
  size_t col = 0;  // j index where applicable

  int axis = 2;
  Rat plane;
  Rat u0, u1, v0, v1;
  int normal_sign = 1;  // outward normal is normal_sign * unit(axis)

  Rat area() const { return (u1 - u0) * (v1 - v0); }
  std::array<Vec3, 4> corners() const;
  Vec3 outward_area_vector() const;  // outward normal scaled by face area
};

struct TerrainMesh {
  Heightfield hf;
  std::vector<Face> faces;  // canonical construction order

  // Shared 3D edge segments between face pairs, keyed by (index, index) with
  // the smaller index first. Degenerate terrains can put four faces on one
  // grid line, so a pair may in principle carry several segments.
  std::map<std::pair<size_t, size_t>, std::vector<Segment3>> adjacency;

  const Face* find(const std::string& id) const;
  const Face& at(const std::string& id) const;  // throws if absent

  // Shared edges between two faces (empty when not adjacent).
  const std::vector<Segment3>* shared_edges(const std::string& a, const std::string& b) const;

 private:
  friend TerrainMesh build_mesh(const Heightfield&);
  std::unordered_map<std::string, size_t> index_;
};

// Enumerates every face of the closed polyhedron over the heightfield, with
// one Top per cell (a grid cut at every cell boundary), and populates the
// shared-edge adjacency. Deterministic: equal inputs give identical meshes.
TerrainMesh build_mesh(const Heightfield& hf);

// Total area of all faces, exact.
Rat surface_area(const TerrainMesh& mesh);

}  // namespace terrafold
