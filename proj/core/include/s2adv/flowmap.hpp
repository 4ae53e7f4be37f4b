#pragma once

#include <cstddef>
#include <vector>

#include "s2adv/velocity.hpp"

namespace s2adv {

/// Integrates s'(tau) = c(s, tau) with s(t_start) = s_start up to t_end using
/// classical RK4. Integration runs backward when t_end < t_start. Steps have
/// length `substep` except the last, which is shortened to land on t_end.
///
/// The result is not wrapped into [0, 1).
double rk4_integrate(double s_start, const VelocityField& velocity, double t_start, double t_end,
                     double substep);

/// Backward flow map between two time levels: takeoff[i] is where the
/// characteristic through s_i = i/N at t_from was located at t_to.
struct FlowMap {
  std::vector<double> takeoff;  // wrapped into [0, 1)
  double t_from = 0.0;
  double t_to = 0.0;

  std::size_t size() const { return takeoff.size(); }

  static FlowMap identity(std::size_t n, double t);
};

/// Builds Psi_{t_new}^{t_new - dt_macro} on the mesh s_i = i/n.
FlowMap build_backward_flow_map(std::size_t n, const VelocityField& velocity, double t_new,
                                double dt_macro, double substep);

/// How compose_flow_maps evaluates the outer map between nodes.
enum class DisplacementInterpolation {
  monotone_cubic,  ///< Fritsch-Carlson limited Hermite cubic
  cubic_lagrange,  ///< centered four-point Lagrange cubic
};

/// outer o inner, i.e. the map from inner.t_from to outer.t_to.
///
/// Requires outer.t_from == inner.t_to and equal mesh sizes (MeshMismatch
/// otherwise). The outer map is evaluated off-node by interpolating its
/// displacement d(s) = takeoff(s) - s, which is continuous on the circle,
/// then wrapping the result.
FlowMap compose_flow_maps(const FlowMap& outer, const FlowMap& inner,
                          DisplacementInterpolation method = DisplacementInterpolation::cubic_lagrange);

/// Psi o Psi for a map of an autonomous field, covering twice its interval.
FlowMap double_flow_map(const FlowMap& map,
                        DisplacementInterpolation method = DisplacementInterpolation::cubic_lagrange);

/// Signed periodic difference a - b reduced to [-1/2, 1/2).
double periodic_difference(double a, double b);

}  // namespace s2adv
