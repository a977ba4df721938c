#pragma once

#include <Eigen/Core>
#include <vector>

namespace sct {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using PointCloud = std::vector<Vec3>;

}  // namespace sct
