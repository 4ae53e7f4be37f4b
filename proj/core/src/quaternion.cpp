#include "s2adv/quaternion.hpp"

#include <cmath>

#include "s2adv/error.hpp"

namespace s2adv {

namespace {

constexpr double kSmallAngle = 1e-8;

// sin(x)/x with a quadratic Taylor expansion near zero.
double sinc(double x) {
  if (std::abs(x) < kSmallAngle) {
    return 1.0 - x * x / 6.0;
  }
  return std::sin(x) / x;
}

}  // namespace

Quaternion Quaternion::from_axis_angle(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (n == 0.0) {
    if (std::remainder(angle, 2.0 * M_PI) == 0.0) {
      return {std::cos(0.5 * angle), Vec3::Zero()};
    }
    throw DomainError("from_axis_angle: zero rotation axis");
  }
  return {std::cos(0.5 * angle), (std::sin(0.5 * angle) / n) * axis};
}

double Quaternion::norm() const { return std::hypot(scalar_, vec_.norm()); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw DomainError("normalized: zero quaternion");
  }
  return {scalar_ / n, vec_ / n};
}

bool Quaternion::is_finite() const { return std::isfinite(scalar_) && vec_.allFinite(); }

Quaternion hamilton_product(const Quaternion& lhs, const Quaternion& rhs) {
  const double a1 = lhs.scalar();
  const double a2 = rhs.scalar();
  const Vec3& u1 = lhs.vec();
  const Vec3& u2 = rhs.vec();
  return {a1 * a2 - u1.dot(u2), a1 * u2 + a2 * u1 + u1.cross(u2)};
}

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.squared_norm();
  if (n2 == 0.0) {
    throw DomainError("inverse: zero quaternion has no inverse");
  }
  return {q.scalar() / n2, -q.vec() / n2};
}

Quaternion exp_map(const Quaternion& q) {
  const double scale = std::exp(q.scalar());
  const double angle = q.vec().norm();
  return {scale * std::cos(angle), (scale * sinc(angle)) * q.vec()};
}

double quaternion_angle(const Quaternion& q) {
  // Same value as arccos(a/|q|) but well conditioned near 0 and pi.
  return std::atan2(q.vec().norm(), q.scalar());
}

Quaternion log_map(const Quaternion& q) {
  const double un = q.vec().norm();
  if (un == 0.0) {
    if (q.scalar() > 0.0) {
      return {std::log(q.scalar()), Vec3::Zero()};
    }
    throw DomainError(q.scalar() == 0.0 ? "log_map: zero quaternion"
                                        : "log_map: negative real quaternion has no principal logarithm");
  }
  const double angle = quaternion_angle(q);
  return {std::log(q.norm()), (angle / un) * q.vec()};
}

Quaternion power_map(const Quaternion& q, double exponent) {
  const double un = q.vec().norm();
  const double a = q.scalar();
  if (un == 0.0) {
    if (a > 0.0) {
      return {std::pow(a, exponent), Vec3::Zero()};
    }
    throw DomainError(a == 0.0 ? "power_map: zero quaternion"
                               : "power_map: negative real quaternion has no principal power");
  }
  const double k = quaternion_angle(q);
  const double scale = std::pow(q.squared_norm(), 0.5 * exponent);
  // sin(f k)/|u| written as f sinc(f k) (k/|u|) so that |u| -> 0 stays finite.
  const double fk = exponent * k;
  return {scale * std::cos(fk), (scale * exponent * sinc(fk) * (k / un)) * q.vec()};
}

Vec3 rotate(const Vec3& p, const Quaternion& rotation) {
  if (std::abs(rotation.norm() - 1.0) > 1e-9) {
    throw DomainError("rotate: rotation quaternion is not unit");
  }
  // For unit r the inverse is the conjugate.
  const Quaternion out = rotation * Quaternion::pure(p) * rotation.conjugate();
  return out.vec();
}

UnitProductChain& UnitProductChain::operator*=(const Quaternion& q) {
  value_ = value_ * q;
  if (++since_normalize_ >= interval_) {
    value_ = value_.normalized();
    since_normalize_ = 0;
  }
  return *this;
}

}  // namespace s2adv
