#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "s2adv/sphere_point.hpp"

namespace s2adv {

/// Samples p_i = p(s_i) of a closed curve at s_i = i/N, i = 0..N-1, with
/// index N identified with 0.
///
/// Points are stored as plain 3-vectors: componentwise schemes without
/// projection legitimately leave the sphere, and that drift is measured
/// rather than forbidden. Use max_unit_deviation() to check the unit
/// invariant for the spherical schemes.
class SphereCurve {
 public:
  SphereCurve() = default;
  explicit SphereCurve(std::vector<Vec3> points);

  std::size_t size() const { return points_.size(); }
  double spacing() const { return 1.0 / static_cast<double>(points_.size()); }
  double node(std::size_t i) const { return static_cast<double>(i) * spacing(); }

  const Vec3& operator[](std::size_t i) const { return points_[i]; }
  Vec3& operator[](std::size_t i) { return points_[i]; }
  /// Periodic access for any signed index.
  const Vec3& at_periodic(long i) const;
  /// The point as a SpherePoint; throws DomainError if it is not unit.
  SpherePoint sphere_point(std::size_t i) const { return SpherePoint(points_[i]); }

  std::span<const Vec3> points() const { return points_; }
  std::vector<double> component(int axis) const;

  /// max_i | |p_i| - 1 |
  double max_unit_deviation() const;
  double min_norm() const;
  double max_norm() const;

  /// Curve whose node i holds this curve's node (i - shift) mod N.
  SphereCurve circular_shift(long shift) const;

 private:
  std::vector<Vec3> points_;
};

}  // namespace s2adv
