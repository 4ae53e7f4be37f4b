#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <span>

#include "s2adv/sphere_point.hpp"

namespace s2adv {

/// Great-circle distance in radians, in [0, pi].
double geodesic_distance(const SpherePoint& a, const SpherePoint& b);

/// Spherical linear interpolation, the vector part of q_a (q_a^-1 q_b)^t.
///
/// `t` may lie outside [0, 1]; t = 2 extrapolates past `to` by the full angle.
/// t == 0 and t == 1 return the end points exactly, and points closer than
/// 1e-12 rad return `from`. Throws DomainError if from . to <= -1 + 1e-9.
SpherePoint slerp(const SpherePoint& from, const SpherePoint& to, double t);

/// Spherical quadratic interpolant through three points, parameterized on
/// [0, 1] with the middle point reached at t = 1/2.
///
/// The two control points are the geodesic extrapolations SLERP(p3, p2, 2)
/// and SLERP(p1, p2, 2); they are computed once at construction.
class Sider2 {
 public:
  Sider2(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3);

  SpherePoint operator()(double t) const;

  const SpherePoint& control_a() const { return control_a_; }
  const SpherePoint& control_b() const { return control_b_; }

 private:
  SpherePoint p1_;
  SpherePoint p3_;
  SpherePoint control_a_;
  SpherePoint control_b_;
};

/// Spherical cubic interpolant through four points at t = 0, 1/3, 2/3, 1,
/// built as SLERP(SIDER2(p1,p2,p3, 3t/2), SIDER2(p2,p3,p4, (3t-1)/2), t).
class Sider3 {
 public:
  Sider3(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
         const SpherePoint& p4);

  SpherePoint operator()(double t) const;

 private:
  Sider2 head_;
  Sider2 tail_;
  SpherePoint p1_;
  SpherePoint p4_;
};

SpherePoint sider2(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3, double t);
SpherePoint sider3(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
                   const SpherePoint& p4, double t);

/// Polygonal geodesic length of `curve` sampled at `samples` uniform
/// parameters in [r_lo, r_hi]. This is the variation used to rank SENO
/// candidates; it never undershoots the end-point distance.
template <class Curve>
double curve_variation(const Curve& curve, double r_lo, double r_hi, int samples = 16) {
  if (samples < 2) {
    samples = 2;
  }
  const double h = (r_hi - r_lo) / (samples - 1);
  SpherePoint prev = curve(r_lo);
  double total = 0.0;
  for (int m = 1; m < samples; ++m) {
    const double r = (m == samples - 1) ? r_hi : r_lo + m * h;
    SpherePoint next = curve(r);
    total += geodesic_distance(prev, next);
    prev = next;
  }
  return total;
}

struct SenoOptions {
  /// Samples per candidate interval when measuring variation.
  int variation_samples = 16;
  /// Variations closer than this are ties, resolved toward the centered stencil.
  double tie_tolerance = 1e-14;
};

/// Outcome of an ENO stencil competition.
///
/// `stencil` indexes the candidate: for SENO3, 0 = {j-2..j+1}, 1 = {j-1..j+2},
/// 2 = {j..j+3}; for SENO2, 0 = {j-1..j+1}, 1 = {j..j+2}. Candidates whose
/// construction is degenerate carry infinite variation.
template <std::size_t Candidates>
struct SenoSelection {
  int stencil = 0;
  std::array<double, Candidates> variation{};
  SpherePoint value{1.0, 0.0, 0.0};
};

/// SENO3 interpolation inside the cell [p_j, p_{j+1}] at local coordinate
/// lambda in [0, 1]. `points` holds p_{j-2}, ..., p_{j+3}.
SenoSelection<3> seno3_select(std::span<const SpherePoint, 6> points, double lambda,
                              const SenoOptions& options = {});
SpherePoint seno3_eval(std::span<const SpherePoint, 6> points, double lambda,
                       const SenoOptions& options = {});

/// SENO2 interpolation inside [p_j, p_{j+1}]. `points` holds p_{j-1}, ..., p_{j+2}.
SenoSelection<2> seno2_select(std::span<const SpherePoint, 4> points, double lambda,
                              const SenoOptions& options = {});
SpherePoint seno2_eval(std::span<const SpherePoint, 4> points, double lambda,
                       const SenoOptions& options = {});

}  // namespace s2adv
