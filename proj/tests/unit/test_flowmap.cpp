#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "s2adv/error.hpp"
#include "s2adv/flowmap.hpp"

using namespace s2adv;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

VelocityField linear_growth() {
  return VelocityField::custom([](double s, double) { return s; }, true, "linear-growth");
}

VelocityField smooth_autonomous() {
  return VelocityField::custom([](double s, double) { return 1.0 + 0.5 * std::sin(kTwoPi * s); }, true);
}

double max_takeoff_gap(const FlowMap& a, const FlowMap& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(periodic_difference(a.takeoff[i], b.takeoff[i])));
  }
  return worst;
}

}  // namespace

TEST_CASE("velocity fields") {
  CHECK(VelocityField::constant(0.5)(0.3, 7.0) == 0.5);
  const auto space = VelocityField::reversible_cosine(4.0, CosineMode::space);
  CHECK(space(0.25, 0.0) == doctest::Approx(std::cos(kTwoPi * 0.25 / 4.0)));
  CHECK(space(1.25, 0.0) == doctest::Approx(space(0.25, 0.0)));
  CHECK(space.autonomous());
  const auto time = VelocityField::reversible_cosine(4.0, CosineMode::time);
  CHECK(time(0.7, 1.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(time(0.2, 2.0) == doctest::Approx(-1.0));
  CHECK_FALSE(time.autonomous());

  const auto bad = VelocityField::custom([](double, double) { return std::nan(""); });
  CHECK_THROWS_AS(bad(0.1, 0.0), DomainError);
  CHECK(wrap_unit(-0.25) == 0.75);
}

TEST_CASE("rk4 with constant speed moves backward by c dt") {
  CHECK(rk4_integrate(0.45, VelocityField::constant(0.5), 0.1, 0.0, 1e-3) == doctest::Approx(0.4).epsilon(1e-15));
  // A step that does not divide the interval is shortened at the end.
  CHECK(rk4_integrate(0.45, VelocityField::constant(0.5), 0.1, 0.0, 0.03) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(rk4_integrate(0.2, VelocityField::constant(1.0), 0.0, 0.0, 1e-3) == 0.2);
}

TEST_CASE("time-mode cosine returns every point after a full period") {
  const auto velocity = VelocityField::reversible_cosine(4.0, CosineMode::time);
  for (double s : {0.0, 0.3, 0.77}) {
    CHECK(std::abs(rk4_integrate(s, velocity, 4.0, 0.0, 1e-3) - s) < 1e-12);
  }
}

TEST_CASE("rk4 on c(s) = s matches the exponential solution") {
  const double back = rk4_integrate(0.5, linear_growth(), 1.0, 0.0, 1e-3);
  CHECK(back == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-13));
  const double forward = rk4_integrate(0.2, linear_growth(), 0.0, 1.0, 1e-3);
  CHECK(forward == doctest::Approx(0.2 * std::exp(1.0)).epsilon(1e-13));
}

TEST_CASE("rk4 halving the substep shows fourth order") {
  const double exact = 0.3 * std::exp(-1.0);
  double previous = 0.0;
  for (double h : {0.2, 0.1, 0.05}) {
    const double err = std::abs(rk4_integrate(0.3, linear_growth(), 1.0, 0.0, h) - exact);
    if (previous > 0.0) {
      const double order = std::log2(previous / err);
      CHECK(order >= 3.7);
      CHECK(order <= 4.3);
    }
    previous = err;
  }
}

TEST_CASE("identity and constant-shift flow maps") {
  const FlowMap id = FlowMap::identity(8, 1.5);
  CHECK(id.t_from == 1.5);
  CHECK(id.t_to == 1.5);
  for (std::size_t i = 0; i < 8; ++i) CHECK(id.takeoff[i] == i / 8.0);

  const FlowMap shift = build_backward_flow_map(8, VelocityField::constant(0.25), 1.0, 1.0, 1e-3);
  CHECK(shift.t_from == 1.0);
  CHECK(shift.t_to == 0.0);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(std::abs(periodic_difference(shift.takeoff[i], wrap_unit(i / 8.0 - 0.25))) < 1e-13);
    CHECK(shift.takeoff[i] >= 0.0);
    CHECK(shift.takeoff[i] < 1.0);
  }
}

TEST_CASE("flow maps of a smooth field preserve the cyclic order of nodes") {
  const FlowMap map = build_backward_flow_map(256, smooth_autonomous(), 0.4, 0.4, 1e-3);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const double next = map.takeoff[(i + 1) % map.size()];
    CHECK(periodic_difference(next, map.takeoff[i]) > 0.0);
  }
}

TEST_CASE("the space-mode cosine field is discontinuous where the domain wraps") {
  // c(0) = 1 while c(1-) = cos(pi/2) = 0, so characteristics near s = 0 can cross.
  const auto velocity = VelocityField::reversible_cosine(4.0, CosineMode::space);
  CHECK(velocity(0.0, 0.0) == 1.0);
  CHECK(std::abs(velocity(1.0 - 1e-12, 0.0)) < 1e-11);
}

TEST_CASE("composition of shifts adds them") {
  const auto velocity = VelocityField::constant(0.3);
  const FlowMap inner = build_backward_flow_map(16, velocity, 0.2, 0.1, 1e-3);
  const FlowMap outer = build_backward_flow_map(16, velocity, 0.1, 0.1, 1e-3);
  const FlowMap both = compose_flow_maps(outer, inner);
  CHECK(both.t_from == doctest::Approx(0.2));
  CHECK(both.t_to == doctest::Approx(0.0));
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(std::abs(periodic_difference(both.takeoff[i], i / 16.0 - 0.06)) < 1e-14);
  }
  const FlowMap direct = build_backward_flow_map(16, velocity, 0.2, 0.2, 1e-3);
  CHECK(max_takeoff_gap(both, direct) < 1e-14);
}

TEST_CASE("composition rejects mismatched maps") {
  const auto velocity = VelocityField::constant(0.3);
  const FlowMap a = build_backward_flow_map(16, velocity, 0.2, 0.1, 1e-3);
  const FlowMap b = build_backward_flow_map(16, velocity, 0.5, 0.1, 1e-3);
  CHECK_THROWS_AS(compose_flow_maps(a, b), MeshMismatch);
  const FlowMap c = build_backward_flow_map(32, velocity, 0.1, 0.1, 1e-3);
  const FlowMap d = build_backward_flow_map(16, velocity, 0.2, 0.1, 1e-3);
  CHECK_THROWS_AS(compose_flow_maps(c, d), MeshMismatch);
}

TEST_CASE("composition with the identity changes nothing") {
  const FlowMap map = build_backward_flow_map(64, smooth_autonomous(), 0.3, 0.3, 1e-3);
  const FlowMap left = compose_flow_maps(FlowMap::identity(64, 0.0), map);
  const FlowMap right = compose_flow_maps(map, FlowMap::identity(64, 0.3));
  CHECK(max_takeoff_gap(left, map) < 1e-15);
  CHECK(max_takeoff_gap(right, map) < 1e-15);
}

TEST_CASE("flow-map doubling converges to direct integration") {
  for (auto method : {DisplacementInterpolation::cubic_lagrange, DisplacementInterpolation::monotone_cubic}) {
    double first = 0.0, last = 0.0;
    for (std::size_t n : {32, 64, 128, 256}) {
      const FlowMap one = build_backward_flow_map(n, smooth_autonomous(), 0.1, 0.1, 1e-3);
      const FlowMap two = build_backward_flow_map(n, smooth_autonomous(), 0.1, 0.2, 1e-3);
      const double gap = max_takeoff_gap(double_flow_map(one, method), two);
      if (first == 0.0) first = gap;
      last = gap;
    }
    CHECK(last < first);
  }

  // The default cubic Lagrange reconstruction converges at (at least) third order.
  double previous = 0.0;
  for (std::size_t n : {32, 64, 128, 256}) {
    const FlowMap one = build_backward_flow_map(n, smooth_autonomous(), 0.1, 0.1, 1e-3);
    const FlowMap two = build_backward_flow_map(n, smooth_autonomous(), 0.1, 0.2, 1e-3);
    const double gap = max_takeoff_gap(double_flow_map(one), two);
    if (previous > 0.0) CHECK(std::log2(previous / gap) >= 3.0);
    previous = gap;
  }
}

TEST_CASE("flow-map construction is deterministic") {
  const auto velocity = VelocityField::reversible_cosine(4.0, CosineMode::time);
  const FlowMap a = build_backward_flow_map(128, velocity, 1.3, 0.1, 1e-3);
  const FlowMap b = build_backward_flow_map(128, velocity, 1.3, 0.1, 1e-3);
  CHECK(a.takeoff == b.takeoff);
}

TEST_CASE("periodic difference wraps into [-1/2, 1/2)") {
  CHECK(periodic_difference(0.9, 0.1) == doctest::Approx(-0.2));
  CHECK(periodic_difference(0.1, 0.9) == doctest::Approx(0.2));
  CHECK(periodic_difference(0.5, 0.0) == -0.5);
  CHECK(periodic_difference(3.25, 0.0) == doctest::Approx(0.25));
}
