#include "s2adv/sphere_interp.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "s2adv/error.hpp"

namespace s2adv {

namespace {

constexpr double kAntipodalMargin = 1e-9;
constexpr double kCoincident = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Picks the least-variation candidate; ties within `tolerance` go to the
// candidate closest to `center`.
template <std::size_t K>
int pick_stencil(const std::array<double, K>& variation, double center, double tolerance) {
  double best = kInf;
  for (double v : variation) {
    best = std::min(best, v);
  }
  if (!std::isfinite(best)) {
    return -1;
  }
  int chosen = -1;
  for (std::size_t k = 0; k < K; ++k) {
    if (!(variation[k] <= best + tolerance)) {
      continue;
    }
    if (chosen < 0 || std::abs(static_cast<double>(k) - center) <
                          std::abs(static_cast<double>(chosen) - center)) {
      chosen = static_cast<int>(k);
    }
  }
  return chosen;
}

}  // namespace

double geodesic_distance(const SpherePoint& a, const SpherePoint& b) {
  // atan2 form of arccos(clamp(a.b)): identical value, no cancellation near 0 or pi.
  return std::atan2(a.vec().cross(b.vec()).norm(), a.vec().dot(b.vec()));
}

SpherePoint slerp(const SpherePoint& from, const SpherePoint& to, double t) {
  if (t == 0.0) {
    return from;
  }
  if (t == 1.0) {
    return to;
  }
  if (from.dot(to) <= -1.0 + kAntipodalMargin) {
    throw DomainError("slerp: antipodal pair, geodesic not unique");
  }
  const Quaternion qa = from.as_quaternion();
  const Quaternion relative = inverse(qa) * to.as_quaternion();
  if (quaternion_angle(relative) < kCoincident) {
    return from;
  }
  const Quaternion out = qa * power_map(relative, t);
  return SpherePoint::normalize(out.vec());
}

Sider2::Sider2(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3)
    : p1_(p1), p3_(p3), control_a_(slerp(p3, p2, 2.0)), control_b_(slerp(p1, p2, 2.0)) {}

SpherePoint Sider2::operator()(double t) const {
  if (t == 0.0) {
    return p1_;
  }
  if (t == 1.0) {
    return p3_;
  }
  return slerp(slerp(p1_, control_a_, t), slerp(control_b_, p3_, t), t);
}

Sider3::Sider3(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
               const SpherePoint& p4)
    : head_(p1, p2, p3), tail_(p2, p3, p4), p1_(p1), p4_(p4) {}

SpherePoint Sider3::operator()(double t) const {
  if (t == 0.0) {
    return p1_;
  }
  if (t == 1.0) {
    return p4_;
  }
  return slerp(head_(1.5 * t), tail_(0.5 * (3.0 * t - 1.0)), t);
}

SpherePoint sider2(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3, double t) {
  return Sider2(p1, p2, p3)(t);
}

SpherePoint sider3(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
                   const SpherePoint& p4, double t) {
  return Sider3(p1, p2, p3, p4)(t);
}

SenoSelection<3> seno3_select(std::span<const SpherePoint, 6> points, double lambda,
                              const SenoOptions& options) {
  // Candidate k covers p_{j-2+k} .. p_{j+1+k}; the target cell is its
  // sub-interval [(2-k)/3, (3-k)/3].
  std::array<std::optional<Sider3>, 3> candidates;
  SenoSelection<3> result;
  for (int k = 0; k < 3; ++k) {
    try {
      candidates[k].emplace(points[k], points[k + 1], points[k + 2], points[k + 3]);
      const double lo = (2 - k) / 3.0;
      const double hi = (3 - k) / 3.0;
      result.variation[k] = curve_variation(*candidates[k], lo, hi, options.variation_samples);
    } catch (const DomainError&) {
      candidates[k].reset();
      result.variation[k] = kInf;
    }
  }
  result.stencil = pick_stencil(result.variation, 1.0, options.tie_tolerance);
  if (result.stencil < 0) {
    throw DomainError("seno3: every candidate stencil is degenerate");
  }
  if (lambda == 0.0) {
    result.value = points[2];
  } else if (lambda == 1.0) {
    result.value = points[3];
  } else {
    const int k = result.stencil;
    result.value = (*candidates[k])((2 - k) / 3.0 + lambda / 3.0);
  }
  return result;
}

SpherePoint seno3_eval(std::span<const SpherePoint, 6> points, double lambda,
                       const SenoOptions& options) {
  return seno3_select(points, lambda, options).value;
}

SenoSelection<2> seno2_select(std::span<const SpherePoint, 4> points, double lambda,
                              const SenoOptions& options) {
  // Candidate k covers p_{j-1+k} .. p_{j+1+k}; target cell is [(1-k)/2, (2-k)/2].
  std::array<std::optional<Sider2>, 2> candidates;
  SenoSelection<2> result;
  for (int k = 0; k < 2; ++k) {
    try {
      candidates[k].emplace(points[k], points[k + 1], points[k + 2]);
      const double lo = (1 - k) / 2.0;
      const double hi = (2 - k) / 2.0;
      result.variation[k] = curve_variation(*candidates[k], lo, hi, options.variation_samples);
    } catch (const DomainError&) {
      candidates[k].reset();
      result.variation[k] = kInf;
    }
  }
  // No centered stencil exists for two candidates; ties go left.
  result.stencil = pick_stencil(result.variation, 0.0, options.tie_tolerance);
  if (result.stencil < 0) {
    throw DomainError("seno2: every candidate stencil is degenerate");
  }
  if (lambda == 0.0) {
    result.value = points[1];
  } else if (lambda == 1.0) {
    result.value = points[2];
  } else {
    const int k = result.stencil;
    result.value = (*candidates[k])((1 - k) / 2.0 + lambda / 2.0);
  }
  return result;
}

SpherePoint seno2_eval(std::span<const SpherePoint, 4> points, double lambda,
                       const SenoOptions& options) {
  return seno2_select(points, lambda, options).value;
}

}  // namespace s2adv
