#pragma once

#include <vector>

#include "sct/geometry.hpp"
#include "sct/transform.hpp"

namespace sct {

// Static kd-tree over 3D points. Ties are broken toward the smaller
// point index so queries match the exhaustive search exactly.
class KdTree3 {
 public:
  explicit KdTree3(const PointCloud& points);

  // index of the nearest point and its squared distance
  std::pair<int, double> nearest(const Vec3& q) const;

 private:
  struct Node {
    int left = -1, right = -1;
    int point = -1;   // leaf payload
    int axis = 0;
    double split = 0.0;
  };
  int build(std::vector<int>& idx, int lo, int hi);
  void search(int node, const Vec3& q, int& best, double& best_d2) const;

  const PointCloud& pts_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

struct Correspondence {
  int src = 0;
  int dst = 0;
  double distance = 0.0;
};

// For each src point, the nearest dst point (Euclidean, smallest index
// on ties). Throws DataError on empty input.
std::vector<Correspondence> nearest_correspondences(const PointCloud& src,
                                                    const PointCloud& dst);

// Least-squares rigid fit src -> dst over paired points (SVD with
// determinant correction, no reflections). Throws NumericError on
// degenerate configurations.
RigidTransform kabsch_fit(const std::vector<Vec3>& src,
                          const std::vector<Vec3>& dst);

struct IcpOptions {
  int max_iterations = 100;
  double tol = 1e-4;  // mm change in RMS residual
};

struct IcpResult {
  RigidTransform transform;
  double rms_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> residual_history;  // RMS after each iteration's fit
};

// Point-to-point ICP from identity: alternate nearest correspondences
// and a rigid refit until the RMS residual change drops below tol.
IcpResult icp_register(const PointCloud& src, const PointCloud& dst,
                       const IcpOptions& opts = {});

}  // namespace sct
