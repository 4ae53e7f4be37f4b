#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "s2adv/periodic_interp.hpp"

using namespace s2adv;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> sample(std::size_t n, double (*f)(double)) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = f(static_cast<double>(i) / static_cast<double>(n));
  return v;
}

double sine(double s) { return std::sin(kTwoPi * s); }

template <class Interp>
double max_error(const Interp& interp, double (*f)(double)) {
  double worst = 0.0;
  for (int k = 0; k < 4001; ++k) {
    const double x = k / 4000.0;
    worst = std::max(worst, std::abs(interp(x) - f(x)));
  }
  return worst;
}

}  // namespace

TEST_CASE("locate_cell examples") {
  auto c = locate_cell(0.35, 10);
  CHECK(c.cell == 3);
  CHECK(c.lambda == doctest::Approx(0.5));

  c = locate_cell(-0.05, 10);
  CHECK(c.cell == 9);
  CHECK(c.lambda == doctest::Approx(0.5));

  c = locate_cell(1.0, 10);
  CHECK(c.cell == 0);
  CHECK(c.lambda == 0.0);

  // 0.3 is not representable; the snap puts it on node 3 anyway.
  c = locate_cell(0.1 + 0.2, 10);
  const bool on_node = (c.cell == 3 && c.lambda == 0.0) || (c.cell == 2 && c.lambda == 1.0);
  CHECK(on_node);
}

TEST_CASE("linear interpolation reproduces nodes and midpoints") {
  const std::vector<double> v{1.0, 3.0, -2.0, 0.5};
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(interpolate_linear_periodic(v, i / 4.0) == v[i]);
  }
  CHECK(interpolate_linear_periodic(v, 0.125) == doctest::Approx(2.0));
  CHECK(interpolate_linear_periodic(v, 0.875) == doctest::Approx(0.75));
  CHECK(interpolate_linear_periodic(v, -0.125) == doctest::Approx(0.75));
}

TEST_CASE("monotone cubic reproduces nodes and constant data") {
  const std::vector<double> v{1.0, 3.0, -2.0, 0.5, 0.5, 4.0};
  const PeriodicMonotoneCubic cubic(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(cubic(i / 6.0) == doctest::Approx(v[i]).epsilon(1e-15));
  }
  const PeriodicMonotoneCubic flat(std::vector<double>(8, 2.5));
  CHECK(flat(0.37) == 2.5);
}

TEST_CASE("monotone cubic zeroes slopes at extrema and stays inside each cell's range") {
  const std::vector<double> v{0.0, 0.0, 0.1, 0.9, 1.0, 1.0, 0.3, 0.2};
  const PeriodicMonotoneCubic cubic(v);
  CHECK(cubic.slopes()[4] == 0.0);  // local maximum plateau edge
  CHECK(cubic.slopes()[0] == 0.0);

  const std::size_t n = v.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = std::min(v[j], v[(j + 1) % n]);
    const double hi = std::max(v[j], v[(j + 1) % n]);
    double previous = v[j];
    const double direction = v[(j + 1) % n] - v[j];
    for (int k = 1; k <= 50; ++k) {
      const double value = cubic.evaluate({j, k / 50.0});
      CHECK(value >= lo - 1e-15);
      CHECK(value <= hi + 1e-15);
      CHECK((value - previous) * direction >= -1e-15);
      previous = value;
    }
  }
}

TEST_CASE("monotone cubic on a step does not overshoot") {
  std::vector<double> v(32, 0.0);
  std::fill(v.begin() + 10, v.begin() + 20, 1.0);
  const PeriodicMonotoneCubic cubic(v);
  for (int k = 0; k <= 1000; ++k) {
    const double value = cubic(k / 1000.0);
    CHECK(value >= 0.0);
    CHECK(value <= 1.0);
  }
}

TEST_CASE("monotone cubic converges at third order on smooth data") {
  double previous = 0.0;
  for (std::size_t n : {64, 128, 256, 512}) {
    const PeriodicMonotoneCubic cubic(sample(n, sine));
    const double err = max_error(cubic, sine);
    if (previous > 0.0) {
      CHECK(std::log2(previous / err) >= 2.7);
    }
    previous = err;
  }
}

TEST_CASE("cubic Lagrange interpolation converges at fourth order") {
  double previous = 0.0;
  for (std::size_t n : {32, 64, 128, 256}) {
    const auto v = sample(n, sine);
    const double err = max_error([&](double x) { return interpolate_cubic_lagrange_periodic(v, x); }, sine);
    if (previous > 0.0) {
      CHECK(std::log2(previous / err) >= 3.7);
    }
    previous = err;
  }
}

TEST_CASE("linear interpolation converges at second order") {
  double previous = 0.0;
  for (std::size_t n : {32, 64, 128, 256}) {
    const auto v = sample(n, sine);
    const double err = max_error([&](double x) { return interpolate_linear_periodic(v, x); }, sine);
    if (previous > 0.0) {
      CHECK(std::log2(previous / err) == doctest::Approx(2.0).epsilon(0.05));
    }
    previous = err;
  }
}
