#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s2adv/curve.hpp"
#include "s2adv/flowmap.hpp"
#include "s2adv/initial_conditions.hpp"
#include "s2adv/sphere_interp.hpp"
#include "s2adv/velocity.hpp"

namespace s2adv {

/// Interpolation used to evaluate the previous time level at takeoff points.
enum class Scheme {
  componentwise_linear,
  componentwise_linear_projected,
  componentwise_monotone_cubic,
  componentwise_monotone_cubic_projected,
  slerp,
  seno2,
  seno3,
};

inline constexpr Scheme kAllSchemes[] = {
    Scheme::componentwise_linear,         Scheme::componentwise_linear_projected,
    Scheme::componentwise_monotone_cubic, Scheme::componentwise_monotone_cubic_projected,
    Scheme::slerp,                        Scheme::seno2,
    Scheme::seno3,
};

/// Short command-line name: linear, linear-proj, mcubic, mcubic-proj, slerp, seno2, seno3.
std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);
/// True for schemes whose output is guaranteed to lie on the sphere.
bool keeps_unit_norm(Scheme scheme);

/// v / |v|; throws DomainError for |v| <= 1e-13.
SpherePoint project_to_sphere(const Vec3& v);

/// Periodic piecewise-linear interpolation of each component at x.
Vec3 interpolate_componentwise_linear(const SphereCurve& curve, double x);
/// Periodic Fritsch-Carlson monotone cubic of each component at x.
Vec3 interpolate_componentwise_monotone_cubic(const SphereCurve& curve, double x);

/// One semi-Lagrangian update: p_i^{n+1} = p^n(takeoff_i), with p^n
/// reconstructed from `curve` by `scheme`.
///
/// Throws MeshMismatch if the sizes differ, and DomainError naming the grid
/// index when an interpolation stencil is degenerate.
SphereCurve step(const SphereCurve& curve, const FlowMap& map, Scheme scheme,
                 const SenoOptions& options = {});

struct SolverConfig {
  std::size_t n = 128;
  double t_final = 4.0;
  double dt_macro = 0.1;
  double substep = 1e-3;
  VelocityField velocity = VelocityField::reversible_cosine(4.0, CosineMode::time);
  Scheme scheme = Scheme::seno3;
  InitialCondition initial = smooth_initial_condition();
  int variation_samples = 16;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  std::size_t step_count() const;
};

struct Snapshot {
  std::size_t step = 0;
  double time = 0.0;
  SphereCurve curve;
};

/// Receives each time level as it is produced, starting with t = 0.
using SnapshotObserver = std::function<void(const Snapshot&)>;

/// Advances the initial curve to t_final in ceil(t_final/dt_macro) steps;
/// the last step is shortened so the final time is exactly t_final.
///
/// The flow map is rebuilt each step unless the field is autonomous, in
/// which case maps are cached per step length. Returns the final snapshot.
Snapshot run(const SolverConfig& config, const SnapshotObserver& observer);

/// Convenience overload collecting every snapshot (initial plus one per step).
std::vector<Snapshot> run(const SolverConfig& config);

/// Global Lagrangian reference: p_i(T) = p0(Psi_T^0(s_i)), obtained by one
/// characteristic integration from t_final back to 0 per node and a direct
/// evaluation of the initial condition. No interpolation error accumulates.
SphereCurve global_solve(const SolverConfig& config);

}  // namespace s2adv
