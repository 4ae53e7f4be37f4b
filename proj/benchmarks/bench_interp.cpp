#include <benchmark/benchmark.h>

#include <array>
#include <cmath>

#include "s2adv/solver.hpp"
#include "s2adv/sphere_interp.hpp"

namespace {

using s2adv::SpherePoint;

std::array<SpherePoint, 6> smooth_stencil() {
  const auto ic = s2adv::smooth_initial_condition();
  return {ic(0.10), ic(0.11), ic(0.12), ic(0.13), ic(0.14), ic(0.15)};
}

void BM_Slerp(benchmark::State& state) {
  const SpherePoint a(1.0, 0.0, 0.0);
  const SpherePoint b = SpherePoint::normalize({1.0, 0.3, 0.2});
  double t = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s2adv::slerp(a, b, t));
  }
}
BENCHMARK(BM_Slerp);

void BM_Sider3(benchmark::State& state) {
  const auto p = smooth_stencil();
  const s2adv::Sider3 curve(p[0], p[1], p[2], p[3]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve(0.42));
  }
}
BENCHMARK(BM_Sider3);

void BM_Seno3Eval(benchmark::State& state) {
  const auto p = smooth_stencil();
  for (auto _ : state) {
    benchmark::DoNotOptimize(s2adv::seno3_eval(p, 0.42));
  }
}
BENCHMARK(BM_Seno3Eval);

void BM_Step(benchmark::State& state) {
  const auto scheme = static_cast<s2adv::Scheme>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto curve = s2adv::smooth_initial_condition().sample(n);
  const auto velocity = s2adv::VelocityField::reversible_cosine(4.0, s2adv::CosineMode::time);
  const auto map = s2adv::build_backward_flow_map(n, velocity, 0.1, 0.1, 1e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s2adv::step(curve, map, scheme));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
  state.SetLabel(std::string(s2adv::scheme_name(scheme)));
}
BENCHMARK(BM_Step)
    ->ArgsProduct({{0, 2, 4, 5, 6}, {256, 1024}})
    ->Unit(benchmark::kMillisecond);

void BM_BuildFlowMap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto velocity = s2adv::VelocityField::reversible_cosine(4.0, s2adv::CosineMode::space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s2adv::build_backward_flow_map(n, velocity, 0.1, 0.1, 1e-3));
  }
}
BENCHMARK(BM_BuildFlowMap)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
