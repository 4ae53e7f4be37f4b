#include "s2adv/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace s2adv {

SphereCurve::SphereCurve(std::vector<Vec3> points) : points_(std::move(points)) {}

const Vec3& SphereCurve::at_periodic(long i) const {
  const auto n = static_cast<long>(points_.size());
  long k = i % n;
  if (k < 0) {
    k += n;
  }
  return points_[static_cast<std::size_t>(k)];
}

std::vector<double> SphereCurve::component(int axis) const {
  std::vector<double> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    out[i] = points_[i][axis];
  }
  return out;
}

double SphereCurve::max_unit_deviation() const {
  double worst = 0.0;
  for (const Vec3& p : points_) {
    worst = std::max(worst, std::abs(p.norm() - 1.0));
  }
  return worst;
}

double SphereCurve::min_norm() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const Vec3& p : points_) {
    lo = std::min(lo, p.norm());
  }
  return lo;
}

double SphereCurve::max_norm() const {
  double hi = 0.0;
  for (const Vec3& p : points_) {
    hi = std::max(hi, p.norm());
  }
  return hi;
}

SphereCurve SphereCurve::circular_shift(long shift) const {
  std::vector<Vec3> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    out[i] = at_periodic(static_cast<long>(i) - shift);
  }
  return SphereCurve(std::move(out));
}

}  // namespace s2adv
