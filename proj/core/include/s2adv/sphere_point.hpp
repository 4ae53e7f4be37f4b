#pragma once

#include "s2adv/quaternion.hpp"

namespace s2adv {

/// A point on the unit sphere S^2.
///
/// Construction either checks the unit invariant (|x^2+y^2+z^2 - 1| <= 1e-12)
/// or projects an arbitrary nonzero vector onto the sphere.
class SpherePoint {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  /// Throws DomainError unless `v` is unit within kUnitTolerance.
  explicit SpherePoint(const Vec3& v);
  SpherePoint(double x, double y, double z) : SpherePoint(Vec3(x, y, z)) {}

  /// v / |v|. Throws DomainError for |v| <= 1e-13.
  static SpherePoint normalize(const Vec3& v);

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  const Vec3& vec() const { return v_; }
  double dot(const SpherePoint& other) const { return v_.dot(other.v_); }

  Quaternion as_quaternion() const { return Quaternion::pure(v_); }

 private:
  struct Trusted {};
  SpherePoint(const Vec3& v, Trusted) : v_(v) {}

  Vec3 v_;
};

}  // namespace s2adv
