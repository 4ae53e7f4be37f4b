#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace s2adv {

using Vec3 = Eigen::Vector3d;

/// Quaternion stored as a scalar part and a 3-vector part, (a, u) = a + bi + cj + dk.
///
/// Products follow the Hamilton convention ij = k, jk = i, ki = j.
class Quaternion {
 public:
  Quaternion() : scalar_(0.0), vec_(Vec3::Zero()) {}
  Quaternion(double scalar, const Vec3& vec) : scalar_(scalar), vec_(vec) {}
  Quaternion(double a, double b, double c, double d) : scalar_(a), vec_(b, c, d) {}

  static Quaternion identity() { return {1.0, Vec3::Zero()}; }
  /// (0, v): the embedding of a 3-vector as a pure quaternion.
  static Quaternion pure(const Vec3& v) { return {0.0, v}; }
  /// Rotation quaternion (cos(angle/2), sin(angle/2) axis). The axis is normalized here.
  static Quaternion from_axis_angle(const Vec3& axis, double angle);

  double scalar() const { return scalar_; }
  const Vec3& vec() const { return vec_; }

  double squared_norm() const { return scalar_ * scalar_ + vec_.squaredNorm(); }
  double norm() const;
  Quaternion conjugate() const { return {scalar_, -vec_}; }
  Quaternion normalized() const;
  bool is_finite() const;

  Quaternion operator-() const { return {-scalar_, -vec_}; }
  Quaternion operator*(double s) const { return {scalar_ * s, vec_ * s}; }
  friend Quaternion operator*(double s, const Quaternion& q) { return q * s; }

 private:
  double scalar_;
  Vec3 vec_;
};

/// (a1 a2 - u1.u2, a1 u2 + a2 u1 + u1 x u2)
Quaternion hamilton_product(const Quaternion& lhs, const Quaternion& rhs);

inline Quaternion operator*(const Quaternion& lhs, const Quaternion& rhs) {
  return hamilton_product(lhs, rhs);
}

/// (a, -u) / |q|^2. Throws DomainError for the zero quaternion.
Quaternion inverse(const Quaternion& q);

/// exp(a) (cos|u|, sin|u|/|u| u), with a Taylor guard for |u| < 1e-8.
Quaternion exp_map(const Quaternion& q);

/// Principal logarithm (ln|q|, angle(q)/|u| u), angle in [0, pi).
///
/// Real quaternions with a > 0 map to (ln a, 0). The zero quaternion and the
/// negative reals have no principal logarithm and raise DomainError.
Quaternion log_map(const Quaternion& q);

/// q^f = exp(f ln q). Any finite exponent is accepted, including the
/// extrapolating f = 2 used to build SIDER2 control points.
Quaternion power_map(const Quaternion& q, double exponent);

/// Vector part of r (0, p) r^-1. Requires |r| = 1 within 1e-9.
Vec3 rotate(const Vec3& p, const Quaternion& rotation);

/// Angle of q measured from the positive real axis, atan2(|u|, a), in [0, pi].
double quaternion_angle(const Quaternion& q);

/// Renormalizes a unit quaternion after every `interval` products.
///
/// Long product chains drift off the unit 3-sphere by roughly one ulp per
/// product; feeding the chain through this accumulator bounds the drift.
class UnitProductChain {
 public:
  explicit UnitProductChain(int interval = 4) : interval_(interval) {}

  UnitProductChain& operator*=(const Quaternion& q);
  const Quaternion& value() const { return value_; }

 private:
  Quaternion value_ = Quaternion::identity();
  int interval_;
  int since_normalize_ = 0;
};

}  // namespace s2adv
