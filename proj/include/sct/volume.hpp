#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sct/geometry.hpp"

namespace sct {

struct RigidTransform;

enum class Unit { HU, MR, Mask };

std::string unit_name(Unit u);
Unit unit_from_name(const std::string& name);

// Regular voxel grid in physical (mm) space. Voxel (i,j,k) center is
// origin + (i*sx, j*sy, k*sz).
struct GridInfo {
  std::array<int, 3> dims{0, 0, 0};
  std::array<double, 3> spacing{1.0, 1.0, 1.0};
  std::array<double, 3> origin{0.0, 0.0, 0.0};

  std::size_t voxel_count() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  }
  Vec3 voxel_center(int i, int j, int k) const {
    return Vec3(origin[0] + i * spacing[0], origin[1] + j * spacing[1],
                origin[2] + k * spacing[2]);
  }
  bool same_grid(const GridInfo& o, double tol = 1e-9) const;
  void validate() const;  // throws DataError on bad dims/spacing
};

constexpr float kHuMin = -1024.0f;
constexpr float kHuMax = 3071.0f;
constexpr float kHuAir = -1000.0f;

// Scalar voxel volume; values stored x-fastest, then y, then z.
struct Volume3D {
  GridInfo grid;
  Unit unit = Unit::HU;
  std::vector<float> values;

  Volume3D() = default;
  Volume3D(GridInfo g, Unit u, float fill = 0.0f)
      : grid(g), unit(u), values(g.voxel_count(), fill) {}

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * grid.dims[1] + j) * grid.dims[0] + i;
  }
  float& at(int i, int j, int k) { return values[index(i, j, k)]; }
  float at(int i, int j, int k) const { return values[index(i, j, k)]; }

  // Trilinear sample at mm point p; outside the grid returns `fill`.
  float sample_trilinear(const Vec3& p, float fill) const;
};

struct Mask3D {
  GridInfo grid;
  std::vector<std::uint8_t> values;  // 0/1

  Mask3D() = default;
  explicit Mask3D(GridInfo g, bool fill = false)
      : grid(g), values(g.voxel_count(), fill ? 1 : 0) {}

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * grid.dims[1] + j) * grid.dims[0] + i;
  }
  bool at(int i, int j, int k) const { return values[index(i, j, k)] != 0; }
  void set(int i, int j, int k, bool v) { values[index(i, j, k)] = v ? 1 : 0; }
  std::size_t count() const;
};

// Detached-header volume I/O. `path` names the header file or its stem:
// <name>.hdr holds the grid metadata, <name>.raw the little-endian float32
// body. Round trips are bit-exact. HU volumes are clamped to
// [-1024, 3071] on load.
Volume3D load_volume(const std::string& path);
void save_volume(const Volume3D& vol, const std::string& path);

// Mask voxel is true iff value > t (strict).
Mask3D threshold_mask(const Volume3D& vol, float t);

// Resamples `vol` onto `target`: each target voxel center is mapped
// through `xf` into the source mm frame and trilinearly interpolated.
// Out-of-grid samples take -1000 HU (air).
Volume3D resample_trilinear(const Volume3D& vol, const RigidTransform& xf,
                            const GridInfo& target, float fill = kHuAir);

enum class CloudMode { HighCT, LowMR };

struct CloudResult {
  PointCloud points;
  bool empty() const { return points.empty(); }
};

// HighCT: centers of voxels above `ct_threshold` (default 200 HU).
// LowMR: centers of voxels below low_fraction * p99(intensity) that lie
// inside the dilated main tissue component.
struct CloudOptions {
  float ct_threshold = 200.0f;
  double low_fraction = 0.10;
  int support_dilation = 2;
};

CloudResult extract_point_cloud(const Volume3D& vol, CloudMode mode,
                                const CloudOptions& opts = {});

// Crops both volumes to the axis-aligned box where their grids overlap.
// Requires equal spacing and near-voxel-aligned origins; throws DataError
// when the overlap is empty.
std::pair<Volume3D, Volume3D> crop_to_overlap(const Volume3D& a,
                                              const Volume3D& b);

// Nearest-rank percentile (q in [0,100]) of the volume's values.
float percentile(const std::vector<float>& values, double q);

}  // namespace sct
