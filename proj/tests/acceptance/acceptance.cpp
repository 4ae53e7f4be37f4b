// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "s2adv/metrics.hpp"
#include "s2adv/solver.hpp"
#include "s2adv/sphere_interp.hpp"

using namespace s2adv;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double max_gap(const SphereCurve& a, const SphereCurve& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a[i] - b[i]).norm());
  return worst;
}

SolverConfig base_config(std::size_t n, Scheme scheme, InitialCondition ic) {
  SolverConfig config;
  config.n = n;
  config.scheme = scheme;
  config.initial = std::move(ic);
  config.t_final = 4.0;
  config.dt_macro = 0.1;
  config.substep = 1e-3;
  config.velocity = VelocityField::reversible_cosine(4.0, CosineMode::time);
  return config;
}

// The time-mode cosine flow over one full period is the identity, so the
// exact solution at T = 4 is the initial curve itself.
struct Sweep {
  std::map<Scheme, std::vector<ErrorSample>> l1;
  std::map<Scheme, double> slope;
};

Sweep smooth_sweep() {
  Sweep sweep;
  for (Scheme scheme : kAllSchemes) {
    for (std::size_t n = 64; n <= 4096; n *= 2) {
      const SolverConfig config = base_config(n, scheme, smooth_initial_condition());
      const Snapshot last = run(config, nullptr);
      sweep.l1[scheme].push_back({n, error_l1(last.curve, config.initial.sample(n))});
    }
    const auto summary = convergence_order(sweep.l1[scheme]);
    sweep.slope[scheme] = summary.slope.value_or(std::nan(""));
  }
  return sweep;
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

Outcome criterion1(const Sweep& sweep) {
  struct Band {
    Scheme scheme;
    double lo, hi;
  };
  const Band bands[] = {{Scheme::componentwise_linear, 1.6, 2.4},
                        {Scheme::slerp, 1.6, 2.4},
                        {Scheme::componentwise_monotone_cubic, 2.5, 3.4},
                        {Scheme::seno2, 2.6, 3.4},
                        {Scheme::seno3, 3.5, 4.5}};
  bool pass = true;
  std::string detail;
  for (const auto& b : bands) {
    const double slope = sweep.slope.at(b.scheme);
    pass = pass && within(slope, b.lo, b.hi);
    detail += fmt("%s=%.3f ", std::string(scheme_name(b.scheme)).c_str(), slope);
  }
  return {pass, detail};
}

Outcome criterion2(const Sweep& sweep) {
  const double linear = std::abs(sweep.slope.at(Scheme::componentwise_linear) -
                                 sweep.slope.at(Scheme::componentwise_linear_projected));
  const double cubic = std::abs(sweep.slope.at(Scheme::componentwise_monotone_cubic) -
                                sweep.slope.at(Scheme::componentwise_monotone_cubic_projected));
  return {linear <= 0.3 && cubic <= 0.3, fmt("|d linear|=%.3f |d mcubic|=%.3f", linear, cubic)};
}

Outcome criterion3() {
  bool pass = true;
  std::string detail;
  for (Scheme scheme : {Scheme::slerp, Scheme::seno2, Scheme::seno3}) {
    double worst = 0.0;
    std::size_t steps = 0;
    run(base_config(128, scheme, smooth_initial_condition()), [&](const Snapshot& s) {
      worst = std::max(worst, s.curve.max_unit_deviation());
      steps = s.step;
    });
    pass = pass && steps == 40 && worst <= 1e-12;
    detail += fmt("%s dev=%.1e ", std::string(scheme_name(scheme)).c_str(), worst);
  }
  double max_norm = 0.0;
  const Snapshot last = run(base_config(128, Scheme::componentwise_linear, smooth_initial_condition()),
                            [&](const Snapshot& s) { max_norm = std::max(max_norm, s.curve.max_norm()); });
  const double min_norm = last.curve.min_norm();
  pass = pass && last.step == 40 && max_norm <= 1.0 + 1e-14 && min_norm < 1.0 - 1e-6;
  detail += fmt("linear max|p|-1=%.1e min|p|=%.6f", max_norm - 1.0, min_norm);
  return {pass, detail};
}

Outcome criterion4() {
  const std::size_t n = 128;
  const long cells = 3;
  const InitialCondition ics[] = {smooth_initial_condition(), kinked_initial_condition(),
                                  discontinuous_initial_condition()};
  double worst = 0.0;
  bool pass = true;
  for (const auto& ic : ics) {
    for (Scheme scheme : kAllSchemes) {
      SolverConfig config = base_config(n, scheme, ic);
      config.velocity = VelocityField::constant(1.0);
      config.dt_macro = static_cast<double>(cells) / static_cast<double>(n);
      config.t_final = 40.0 * config.dt_macro;
      const Snapshot last = run(config, nullptr);
      const double gap = max_gap(last.curve, ic.sample(n).circular_shift(40 * cells));
      pass = pass && last.step == 40 && gap <= 1e-12;
      worst = std::max(worst, gap);
    }
  }
  return {pass, fmt("max deviation from shifted initial curve %.1e over 3 curves x 7 schemes", worst)};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  auto random_point = [&] {
    return SpherePoint::normalize(Vec3(normal(rng), normal(rng), normal(rng)));
  };
  auto step_from = [&](const SpherePoint& p, double max_angle) {
    Vec3 t(normal(rng), normal(rng), normal(rng));
    t -= t.dot(p.vec()) * p.vec();
    t.normalize();
    const double a = max_angle * (0.05 + 0.95 * unit(rng));
    return SpherePoint::normalize(std::cos(a) * p.vec() + std::sin(a) * t);
  };
  auto gap = [](const SpherePoint& a, const SpherePoint& b) { return (a.vec() - b.vec()).norm(); };

  double sider2_err = 0.0, sider3_err = 0.0, slerp_err = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const SpherePoint p1 = random_point();
    const SpherePoint p2 = step_from(p1, 0.7);
    const SpherePoint p3 = step_from(p2, 0.7);
    const SpherePoint p4 = step_from(p3, 0.7);
    sider2_err = std::max(sider2_err, gap(sider2(p1, p2, p3, 0.5), p2));
    sider3_err = std::max({sider3_err, gap(sider3(p1, p2, p3, p4, 1.0 / 3.0), p2),
                           gap(sider3(p1, p2, p3, p4, 2.0 / 3.0), p3)});

    const SpherePoint b = step_from(p1, 3.0);
    const double theta = geodesic_distance(p1, b);
    const double t = unit(rng);
    const SpherePoint mid = slerp(p1, b, t);
    slerp_err = std::max({slerp_err, gap(slerp(p1, b, 0.0), p1), gap(slerp(p1, b, 1.0), b),
                          std::abs(geodesic_distance(p1, mid) - t * theta),
                          std::abs(geodesic_distance(mid, b) - (1.0 - t) * theta)});
  }
  const bool pass = sider2_err <= 1e-10 && sider3_err <= 1e-10 && slerp_err <= 1e-10;
  return {pass, fmt("sider2 %.1e sider3 %.1e slerp %.1e", sider2_err, sider3_err, slerp_err)};
}

Outcome criterion6() {
  const InitialCondition ic = kinked_initial_condition();
  auto final_curve = [&](std::size_t n, Scheme scheme) {
    return run(base_config(n, scheme, ic), nullptr).curve;
  };
  const SphereCurve exact = ic.sample(128);
  const double seno3 = masked_error(final_curve(128, Scheme::seno3), exact);
  const double slerp = masked_error(final_curve(128, Scheme::slerp), exact);
  const double linear = error_l1(final_curve(128, Scheme::componentwise_linear), exact);

  std::vector<ErrorSample> rows;
  for (std::size_t n = 128; n <= 2048; n *= 2) {
    rows.push_back({n, masked_error(final_curve(n, Scheme::seno3), ic.sample(n))});
  }
  const double slope = convergence_order(rows).slope.value_or(std::nan(""));
  const bool pass = seno3 < slerp && seno3 < linear && slope >= 3.3;
  return {pass, fmt("masked seno3=%.2e slerp=%.2e, unmasked linear=%.2e, seno3 slope=%.3f", seno3, slerp,
                    linear, slope)};
}

Outcome criterion7() {
  const InitialCondition ic = discontinuous_initial_condition();
  const std::size_t n = 512;
  auto final_curve = [&](Scheme scheme) {
    SolverConfig config = base_config(n, scheme, ic);
    config.velocity = VelocityField::constant(1.0);
    return run(config, nullptr).curve;
  };
  // Constant unit speed over T = 4 returns every point to its start.
  const SphereCurve exact = ic.sample(n);
  const SphereCurve seno3 = final_curve(Scheme::seno3);
  const SphereCurve linear = final_curve(Scheme::componentwise_linear);

  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) finite = finite && seno3[i].allFinite();
  const auto w_seno3 = transition_width(seno3, exact, 0.1);
  const auto w_linear = transition_width(linear, exact, 0.1);
  bool pass = finite && seno3.max_unit_deviation() <= 1e-12 && w_seno3.size() == 2 &&
              w_linear.size() == w_seno3.size();
  std::string detail = "widths seno3/linear:";
  for (std::size_t k = 0; k < w_seno3.size() && k < w_linear.size(); ++k) {
    pass = pass && w_seno3[k] <= 4 && w_seno3[k] < w_linear[k];
    detail += fmt(" %zu/%zu", w_seno3[k], w_linear[k]);
  }
  detail += fmt(", unit deviation %.1e", seno3.max_unit_deviation());
  return {pass, detail};
}

Outcome criterion8() {
  const auto growth = VelocityField::custom([](double s, double) { return s; }, true);
  const double exact = 0.3 * std::exp(-1.0);
  std::vector<double> errs;
  for (double h : {0.2, 0.1, 0.05}) errs.push_back(std::abs(rk4_integrate(0.3, growth, 1.0, 0.0, h) - exact));
  const double rk_order1 = std::log2(errs[0] / errs[1]);
  const double rk_order2 = std::log2(errs[1] / errs[2]);

  const auto smooth = VelocityField::custom(
      [](double s, double) { return 1.0 + 0.5 * std::sin(2.0 * std::numbers::pi * s); }, true);
  std::vector<ErrorSample> rows;
  for (std::size_t n = 32; n <= 512; n *= 2) {
    const FlowMap one = build_backward_flow_map(n, smooth, 0.1, 0.1, 1e-3);
    const FlowMap two = build_backward_flow_map(n, smooth, 0.1, 0.2, 1e-3);
    const FlowMap doubled = double_flow_map(one);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(periodic_difference(doubled.takeoff[i], two.takeoff[i])));
    }
    rows.push_back({n, worst});
  }
  const double fm_slope = convergence_order(rows).slope.value_or(std::nan(""));
  const bool pass = within(rk_order1, 3.7, 4.3) && within(rk_order2, 3.7, 4.3) && fm_slope >= 3.0;
  return {pass, fmt("rk4 orders %.3f %.3f, doubling slope %.3f", rk_order1, rk_order2, fm_slope)};
}

Outcome criterion9(const Sweep& sweep) {
  const SolverConfig config = base_config(1024, Scheme::seno3, smooth_initial_condition());
  const double gap = error_l1(run(config, nullptr).curve, global_solve(config));
  double convergence_error = 0.0;
  for (const auto& row : sweep.l1.at(Scheme::seno3)) {
    if (row.n == 1024) convergence_error = row.error;
  }
  return {gap <= 10.0 * convergence_error, fmt("|run - global|=%.2e, E(1024)=%.2e", gap, convergence_error)};
}

}  // namespace

int main() {
  const Sweep sweep = smooth_sweep();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"convergence orders, smooth curve", [&] { return criterion1(sweep); }},
      {"projection does not change the order", [&] { return criterion2(sweep); }},
      {"spherical schemes stay on the sphere", criterion3},
      {"exact shift under constant speed", criterion4},
      {"interpolation node properties", criterion5},
      {"kinked curve", criterion6},
      {"discontinuous curve", criterion7},
      {"RK4 and flow-map orders", criterion8},
      {"global and stepwise solutions agree", [&] { return criterion9(sweep); }},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome{false, "exception"};
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome.detail = std::string("exception: ") + e.what();
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("[%s] criterion %zu: %s (%s)\n", outcome.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
