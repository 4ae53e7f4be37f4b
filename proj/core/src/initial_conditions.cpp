#include "s2adv/initial_conditions.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "s2adv/velocity.hpp"

namespace s2adv {

InitialCondition::InitialCondition(std::function<SpherePoint(double)> evaluate, std::string name,
                                   bool requires_even_mesh)
    : evaluate_(std::move(evaluate)), name_(std::move(name)), requires_even_mesh_(requires_even_mesh) {}

SpherePoint InitialCondition::operator()(double s) const { return evaluate_(wrap_unit(s)); }

SphereCurve InitialCondition::sample(std::size_t n) const {
  if (requires_even_mesh_ && n % 2 != 0) {
    throw std::invalid_argument("initial condition '" + name_ + "' needs an even number of nodes");
  }
  std::vector<Vec3> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    points[i] = (*this)(static_cast<double>(i) / static_cast<double>(n)).vec();
  }
  return SphereCurve(std::move(points));
}

InitialCondition cylindrical(ScalarFunction height, std::string name) {
  auto eval = [g = std::move(height)](double s) {
    const double h = g(s);
    const double scale = 1.0 / std::sqrt(1.0 + h * h);
    return SpherePoint::normalize(
        Vec3(std::cos(2.0 * M_PI * s) * scale, std::sin(2.0 * M_PI * s) * scale, h * scale));
  };
  return InitialCondition(std::move(eval), std::move(name));
}

InitialCondition two_plane(ScalarFunction h_plus, ScalarFunction h_minus, std::string name) {
  auto eval = [hp = std::move(h_plus), hm = std::move(h_minus)](double s) {
    if (s < 0.5) {
      const double y = -1.0 + 4.0 * s;
      return SpherePoint::normalize(Vec3(1.0, y, hp(y)));
    }
    const double y = 1.0 - 4.0 * (s - 0.5);
    return SpherePoint::normalize(Vec3(-1.0, y, hm(y)));
  };
  return InitialCondition(std::move(eval), std::move(name), true);
}

InitialCondition smooth_initial_condition() {
  return cylindrical([](double s) { return std::sin(20.0 * M_PI * s); }, "smooth");
}

InitialCondition kinked_initial_condition() {
  return cylindrical([](double s) { return std::abs(std::sin(4.0 * M_PI * s)); }, "kinks");
}

InitialCondition discontinuous_initial_condition() {
  return two_plane([](double y) { return 2.0 * std::sin(2.0 * M_PI * y); },
                   [](double y) { return -2.0 * std::sin(2.0 * M_PI * y); }, "discontinuous");
}

SphereCurve init_cylindrical(const ScalarFunction& height, std::size_t n) {
  return cylindrical(height).sample(n);
}

SphereCurve init_two_plane(const ScalarFunction& h_plus, const ScalarFunction& h_minus, std::size_t n) {
  return two_plane(h_plus, h_minus).sample(n);
}

}  // namespace s2adv
