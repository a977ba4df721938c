#pragma once

#include <cstdint>
#include <vector>

#include "sct/geometry.hpp"
#include "sct/volume.hpp"

namespace sct {

struct TriMesh {
  std::vector<Vec3> vertices;                    // mm
  std::vector<std::array<int, 3>> triangles;     // vertex index triples

  bool empty() const { return triangles.empty(); }
  double total_area() const;
  // V - E + F with E counted over unique undirected edges
  long long euler_characteristic() const;
};

// Classic 256-case marching cubes at `iso`; vertices are interpolated to
// the crossing along cell edges and welded across cells, positions in mm.
// A uniform volume yields an empty mesh.
TriMesh marching_cubes(const Volume3D& vol, float iso);

struct SurfaceDistance {
  std::vector<double> per_vertex;  // one entry per `from` vertex
  double mean = 0.0;
};

// Directional vertex-to-vertex distance: for each vertex of `from`, the
// Euclidean distance to the nearest vertex of `to`.
SurfaceDistance surface_distance(const TriMesh& from, const TriMesh& to);

namespace mc_tables {
extern const int kEdgeTable[256];
extern const std::int8_t kTriTable[256][16];
}  // namespace mc_tables

}  // namespace sct
