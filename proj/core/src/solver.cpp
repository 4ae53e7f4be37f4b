#include "s2adv/solver.hpp"

#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "s2adv/error.hpp"
#include "s2adv/periodic_interp.hpp"

namespace s2adv {

namespace {

struct SchemeInfo {
  Scheme scheme;
  std::string_view name;
};

constexpr SchemeInfo kSchemeNames[] = {
    {Scheme::componentwise_linear, "linear"},
    {Scheme::componentwise_linear_projected, "linear-proj"},
    {Scheme::componentwise_monotone_cubic, "mcubic"},
    {Scheme::componentwise_monotone_cubic_projected, "mcubic-proj"},
    {Scheme::slerp, "slerp"},
    {Scheme::seno2, "seno2"},
    {Scheme::seno3, "seno3"},
};

// Nodes that already satisfy the unit invariant are used as stored, so a
// characteristic landing on a node returns it bit for bit.
SpherePoint node_point(const SphereCurve& curve, long i) {
  const Vec3& v = curve.at_periodic(i);
  if (std::abs(v.squaredNorm() - 1.0) <= SpherePoint::kUnitTolerance) {
    return SpherePoint(v);
  }
  return SpherePoint::normalize(v);
}

// Sphere points of the curve are reused by every query of a step, so the
// conversion happens once per step.
std::vector<SpherePoint> as_sphere_points(const SphereCurve& curve) {
  std::vector<SpherePoint> out;
  out.reserve(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out.push_back(node_point(curve, static_cast<long>(i)));
  }
  return out;
}

template <std::size_t K>
std::array<SpherePoint, K> gather(const std::vector<SpherePoint>& points, std::size_t cell, long first) {
  const auto n = static_cast<long>(points.size());
  auto at = [&](long offset) {
    long k = (static_cast<long>(cell) + first + offset) % n;
    if (k < 0) {
      k += n;
    }
    return points[static_cast<std::size_t>(k)];
  };
  if constexpr (K == 4) {
    return {at(0), at(1), at(2), at(3)};
  } else {
    return {at(0), at(1), at(2), at(3), at(4), at(5)};
  }
}

SphereCurve step_spherical(const SphereCurve& curve, const FlowMap& map, Scheme scheme,
                           const SenoOptions& options) {
  const std::size_t n = curve.size();
  const std::vector<SpherePoint> points = as_sphere_points(curve);
  std::vector<Vec3> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CellLocation at = locate_cell(map.takeoff[i], n);
    try {
      switch (scheme) {
        case Scheme::slerp:
          out[i] = slerp(points[at.cell], points[(at.cell + 1) % n], at.lambda).vec();
          break;
        case Scheme::seno2: {
          const auto stencil = gather<4>(points, at.cell, -1);
          out[i] = seno2_eval(stencil, at.lambda, options).vec();
          break;
        }
        case Scheme::seno3: {
          const auto stencil = gather<6>(points, at.cell, -2);
          out[i] = seno3_eval(stencil, at.lambda, options).vec();
          break;
        }
        default:
          throw std::logic_error("step_spherical: not a spherical scheme");
      }
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << scheme_name(scheme) << " interpolation failed at grid index " << i << " (cell "
          << at.cell << ", lambda " << at.lambda << "): " << e.what();
      throw DomainError(msg.str());
    }
  }
  return SphereCurve(std::move(out));
}

SphereCurve step_componentwise(const SphereCurve& curve, const FlowMap& map, bool cubic, bool project) {
  const std::size_t n = curve.size();
  std::array<std::vector<double>, 3> components = {curve.component(0), curve.component(1),
                                                   curve.component(2)};
  std::vector<PeriodicMonotoneCubic> cubics;
  if (cubic) {
    for (auto& c : components) {
      cubics.emplace_back(c);
    }
  }
  std::vector<Vec3> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = map.takeoff[i];
    Vec3 v;
    if (cubic) {
      const CellLocation at = locate_cell(x, n);
      v = Vec3(cubics[0].evaluate(at), cubics[1].evaluate(at), cubics[2].evaluate(at));
    } else {
      v = Vec3(interpolate_linear_periodic(components[0], x),
               interpolate_linear_periodic(components[1], x),
               interpolate_linear_periodic(components[2], x));
    }
    if (project) {
      try {
        v = project_to_sphere(v).vec();
      } catch (const DomainError& e) {
        std::ostringstream msg;
        msg << "projection failed at grid index " << i << ": " << e.what();
        throw DomainError(msg.str());
      }
    }
    out[i] = v;
  }
  return SphereCurve(std::move(out));
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  for (const auto& info : kSchemeNames) {
    if (info.scheme == scheme) {
      return info.name;
    }
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (const auto& info : kSchemeNames) {
    if (info.name == name) {
      return info.scheme;
    }
  }
  return std::nullopt;
}

bool keeps_unit_norm(Scheme scheme) {
  return scheme != Scheme::componentwise_linear && scheme != Scheme::componentwise_monotone_cubic;
}

SpherePoint project_to_sphere(const Vec3& v) { return SpherePoint::normalize(v); }

Vec3 interpolate_componentwise_linear(const SphereCurve& curve, double x) {
  const std::size_t n = curve.size();
  const CellLocation at = locate_cell(x, n);
  const Vec3& lo = curve[at.cell];
  const Vec3& hi = curve[(at.cell + 1) % n];
  if (at.lambda == 1.0) {
    return hi;
  }
  return lo + at.lambda * (hi - lo);
}

Vec3 interpolate_componentwise_monotone_cubic(const SphereCurve& curve, double x) {
  const CellLocation at = locate_cell(x, curve.size());
  Vec3 out;
  for (int axis = 0; axis < 3; ++axis) {
    out[axis] = PeriodicMonotoneCubic(curve.component(axis)).evaluate(at);
  }
  return out;
}

SphereCurve step(const SphereCurve& curve, const FlowMap& map, Scheme scheme,
                 const SenoOptions& options) {
  if (curve.size() != map.size()) {
    std::ostringstream msg;
    msg << "step: curve has " << curve.size() << " nodes but the flow map has " << map.size();
    throw MeshMismatch(msg.str());
  }
  switch (scheme) {
    case Scheme::componentwise_linear:
      return step_componentwise(curve, map, false, false);
    case Scheme::componentwise_linear_projected:
      return step_componentwise(curve, map, false, true);
    case Scheme::componentwise_monotone_cubic:
      return step_componentwise(curve, map, true, false);
    case Scheme::componentwise_monotone_cubic_projected:
      return step_componentwise(curve, map, true, true);
    case Scheme::slerp:
    case Scheme::seno2:
    case Scheme::seno3:
      return step_spherical(curve, map, scheme, options);
  }
  throw std::logic_error("step: unhandled scheme");
}

void SolverConfig::validate() const {
  if (n < 8) {
    throw std::invalid_argument("mesh size N must be at least 8");
  }
  if (initial.requires_even_mesh() && n % 2 != 0) {
    throw std::invalid_argument("initial condition '" + initial.name() + "' needs an even N");
  }
  if (!(substep > 0.0)) {
    throw std::invalid_argument("substep must be positive");
  }
  if (!(substep <= dt_macro)) {
    throw std::invalid_argument("substep must not exceed the macro time step");
  }
  if (!(dt_macro <= t_final)) {
    throw std::invalid_argument("macro time step must not exceed the final time");
  }
  if (variation_samples < 2) {
    throw std::invalid_argument("variation sample count must be at least 2");
  }
}

std::size_t SolverConfig::step_count() const {
  return static_cast<std::size_t>(std::ceil(t_final / dt_macro * (1.0 - 1e-12)));
}

Snapshot run(const SolverConfig& config, const SnapshotObserver& observer) {
  config.validate();
  const SenoOptions options{config.variation_samples};
  Snapshot current{0, 0.0, config.initial.sample(config.n)};
  if (observer) {
    observer(current);
  }
  const std::size_t steps = config.step_count();
  std::map<double, FlowMap> cache;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_new = (k == steps) ? config.t_final : static_cast<double>(k) * config.dt_macro;
    const double dt = t_new - current.time;
    const double substep = std::min(config.substep, dt);
    FlowMap map;
    if (config.velocity.autonomous()) {
      auto it = cache.find(dt);
      if (it == cache.end()) {
        it = cache.emplace(dt, build_backward_flow_map(config.n, config.velocity, dt, dt, substep)).first;
      }
      map = it->second;
      map.t_from = t_new;
      map.t_to = current.time;
    } else {
      map = build_backward_flow_map(config.n, config.velocity, t_new, dt, substep);
    }
    current = Snapshot{k, t_new, step(current.curve, map, config.scheme, options)};
    if (observer) {
      observer(current);
    }
  }
  return current;
}

std::vector<Snapshot> run(const SolverConfig& config) {
  std::vector<Snapshot> snapshots;
  run(config, [&](const Snapshot& s) { snapshots.push_back(s); });
  return snapshots;
}

SphereCurve global_solve(const SolverConfig& config) {
  config.validate();
  std::vector<Vec3> out(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(config.n);
    const double takeoff = rk4_integrate(s, config.velocity, config.t_final, 0.0, config.substep);
    // Characteristics that return to a node up to round-off evaluate the node
    // itself, which matters when p0 jumps there.
    const CellLocation at = locate_cell(takeoff, config.n);
    const double x = (static_cast<double>(at.cell) + at.lambda) / static_cast<double>(config.n);
    out[i] = config.initial(x).vec();
  }
  return SphereCurve(std::move(out));
}

}  // namespace s2adv
