#include "s2adv/flowmap.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "s2adv/error.hpp"
#include "s2adv/periodic_interp.hpp"

namespace s2adv {

double rk4_integrate(double s_start, const VelocityField& velocity, double t_start, double t_end,
                     double substep) {
  if (!(substep > 0.0)) {
    throw std::invalid_argument("rk4_integrate: substep must be positive");
  }
  const double span = t_end - t_start;
  if (span == 0.0) {
    return s_start;
  }
  const double direction = span > 0.0 ? 1.0 : -1.0;
  // A trailing step shorter than 1e-12 substeps is absorbed into the count.
  const auto steps = static_cast<long>(std::ceil(std::abs(span) / substep * (1.0 - 1e-12)));
  double s = s_start;
  double tau = t_start;
  for (long k = 0; k < steps; ++k) {
    const double h = (k == steps - 1) ? (t_end - tau) : direction * substep;
    const double k1 = velocity(s, tau);
    const double k2 = velocity(s + 0.5 * h * k1, tau + 0.5 * h);
    const double k3 = velocity(s + 0.5 * h * k2, tau + 0.5 * h);
    const double k4 = velocity(s + h * k3, tau + h);
    s += h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    tau = (k == steps - 1) ? t_end : t_start + static_cast<double>(k + 1) * direction * substep;
  }
  return s;
}

FlowMap FlowMap::identity(std::size_t n, double t) {
  FlowMap map;
  map.takeoff.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    map.takeoff[i] = static_cast<double>(i) / static_cast<double>(n);
  }
  map.t_from = t;
  map.t_to = t;
  return map;
}

FlowMap build_backward_flow_map(std::size_t n, const VelocityField& velocity, double t_new,
                                double dt_macro, double substep) {
  if (!(dt_macro > 0.0)) {
    throw std::invalid_argument("build_backward_flow_map: dt_macro must be positive");
  }
  if (!(substep > 0.0) || substep > dt_macro) {
    throw std::invalid_argument("build_backward_flow_map: need 0 < substep <= dt_macro");
  }
  FlowMap map;
  map.t_from = t_new;
  map.t_to = t_new - dt_macro;
  map.takeoff.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(n);
    map.takeoff[i] = wrap_unit(rk4_integrate(s, velocity, map.t_from, map.t_to, substep));
  }
  return map;
}

double periodic_difference(double a, double b) {
  double d = a - b;
  d -= std::floor(d + 0.5);
  return d;
}

FlowMap compose_flow_maps(const FlowMap& outer, const FlowMap& inner,
                          DisplacementInterpolation method) {
  if (outer.size() != inner.size()) {
    std::ostringstream msg;
    msg << "compose_flow_maps: mesh sizes differ (" << outer.size() << " vs " << inner.size() << ")";
    throw MeshMismatch(msg.str());
  }
  if (std::abs(outer.t_from - inner.t_to) > 1e-12 * (1.0 + std::abs(inner.t_to))) {
    std::ostringstream msg;
    msg << "compose_flow_maps: outer starts at t=" << outer.t_from << " but inner ends at t="
        << inner.t_to;
    throw MeshMismatch(msg.str());
  }
  const std::size_t n = outer.size();
  std::vector<double> displacement(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(n);
    displacement[i] = periodic_difference(outer.takeoff[i], s);
  }

  FlowMap result;
  result.t_from = inner.t_from;
  result.t_to = outer.t_to;
  result.takeoff.resize(n);
  if (method == DisplacementInterpolation::monotone_cubic) {
    const PeriodicMonotoneCubic interp(displacement);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = inner.takeoff[i];
      result.takeoff[i] = wrap_unit(x + interp(x));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = inner.takeoff[i];
      result.takeoff[i] = wrap_unit(x + interpolate_cubic_lagrange_periodic(displacement, x));
    }
  }
  return result;
}

FlowMap double_flow_map(const FlowMap& map, DisplacementInterpolation method) {
  // For an autonomous field the map depends only on its interval length, so
  // the same samples serve as the outer map shifted one interval earlier.
  FlowMap outer = map;
  const double length = map.t_from - map.t_to;
  outer.t_from = map.t_to;
  outer.t_to = map.t_to - length;
  return compose_flow_maps(outer, map, method);
}

}  // namespace s2adv
