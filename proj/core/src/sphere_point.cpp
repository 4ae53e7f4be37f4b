#include "s2adv/sphere_point.hpp"

#include <cmath>
#include <sstream>

#include "s2adv/error.hpp"

namespace s2adv {

SpherePoint::SpherePoint(const Vec3& v) : v_(v) {
  const double deviation = std::abs(v.squaredNorm() - 1.0);
  if (!(deviation <= kUnitTolerance)) {
    std::ostringstream msg;
    msg << "SpherePoint: (" << v.x() << ", " << v.y() << ", " << v.z() << ") is not unit";
    throw DomainError(msg.str());
  }
}

SpherePoint SpherePoint::normalize(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-13) || !std::isfinite(n)) {
    throw DomainError("project_to_sphere: vector too close to the origin");
  }
  return SpherePoint(v / n, Trusted{});
}

}  // namespace s2adv
