#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "s2adv/curve.hpp"

namespace s2adv {

using ScalarFunction = std::function<double(double)>;

/// An initial curve p0 : [0, 1) -> S^2 that can be evaluated anywhere, not
/// only at mesh nodes. Evaluation wraps s periodically.
class InitialCondition {
 public:
  InitialCondition(std::function<SpherePoint(double)> evaluate, std::string name,
                   bool requires_even_mesh = false);

  SpherePoint operator()(double s) const;
  SphereCurve sample(std::size_t n) const;

  const std::string& name() const { return name_; }
  bool requires_even_mesh() const { return requires_even_mesh_; }

 private:
  std::function<SpherePoint(double)> evaluate_;
  std::string name_;
  bool requires_even_mesh_;
};

/// p0(s) = (cos 2 pi s, sin 2 pi s, g(s)) / sqrt(1 + g(s)^2): a height
/// profile on the unit cylinder projected onto the sphere.
InitialCondition cylindrical(ScalarFunction height, std::string name = "cylindrical");

/// Two height profiles z = h+(y) on x = 1 and z = h-(y) on x = -1, projected
/// onto the sphere. The first half of [0, 1) sweeps y from -1 toward 1 on
/// x = 1; the second half sweeps y back from 1 toward -1 on x = -1, closing
/// the loop with a jump in x at s = 1/2 and at s = 0.
InitialCondition two_plane(ScalarFunction h_plus, ScalarFunction h_minus, std::string name = "two-plane");

/// g(s) = sin(20 pi s)
InitialCondition smooth_initial_condition();
/// g(s) = |sin(4 pi s)|, with kinks at s = k/4
InitialCondition kinked_initial_condition();
/// h+(y) = 2 sin(2 pi y), h-(y) = -2 sin(2 pi y)
InitialCondition discontinuous_initial_condition();

SphereCurve init_cylindrical(const ScalarFunction& height, std::size_t n);
/// Requires even n; throws std::invalid_argument otherwise.
SphereCurve init_two_plane(const ScalarFunction& h_plus, const ScalarFunction& h_minus, std::size_t n);

}  // namespace s2adv
