#pragma once

#include <string>

#include "sct/geometry.hpp"

namespace sct {

// Rigid map p -> R*p + t in mm space. For registration output, maps CT
// coordinates into MR coordinates.
struct RigidTransform {
  Mat3 R = Mat3::Identity();
  Vec3 t = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return R * p + t; }
  RigidTransform inverse() const;
  // this∘other: first `other`, then this
  RigidTransform compose(const RigidTransform& other) const;

  // rotation angle in degrees (axis-angle magnitude)
  double rotation_angle_deg() const;
  bool is_valid_rotation(double tol = 1e-6) const;

  static RigidTransform identity() { return {}; }
  static RigidTransform rotation_z(double degrees, const Vec3& t = Vec3::Zero());
  static RigidTransform axis_angle(const Vec3& axis, double degrees,
                                   const Vec3& t = Vec3::Zero());
};

Vec3 apply_rigid(const RigidTransform& xf, const Vec3& p);

// JSON form: {"R": [[...],[...],[...]], "t": [x,y,z]}, row-major R.
std::string transform_to_json(const RigidTransform& xf);
RigidTransform transform_from_json(const std::string& json_text);
void save_transform(const RigidTransform& xf, const std::string& path);
RigidTransform load_transform(const std::string& path);

}  // namespace sct
