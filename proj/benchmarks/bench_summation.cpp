// Microbenchmarks for the pairwise kernels and the two field-summation
// paths (direct O(N^2) sweep vs quadtree).  Run with --benchmark_filter=...

#include <benchmark/benchmark.h>

#include <random>

#include "gyrosim/kernel.hpp"
#include "gyrosim/limit_model.hpp"
#include "gyrosim/velocity_tree.hpp"

using namespace gyrosim;

namespace {

double uni(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(g() >> 11) * 0x1.0p-53);
}

Ensemble make_ensemble(std::size_t n, double vel_scale) {
  std::mt19937_64 gen(99);
  Ensemble ens;
  ens.params.omega_c = 1.0;
  ens.params.delta = 0.0;
  ens.frame = Frame::GyroFrame;
  ens.particles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ens.particles.push_back({{uni(gen, -1, 1), uni(gen, -1, 1)},
                             {vel_scale * uni(gen, -1, 1), vel_scale * uni(gen, -1, 1)},
                             uni(gen, 0.5, 1.5)});
  }
  return ens;
}

void KernelValue(benchmark::State& state) {
  PhysicalParams p;
  p.omega_c = 1.7;
  const Vec2 xi{0.8, -0.3}, eta{0.2, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gyro_kernel(xi, eta, p));
  }
}
BENCHMARK(KernelValue);

void KernelGradients(benchmark::State& state) {
  PhysicalParams p;
  p.omega_c = 1.7;
  const Vec2 xi{0.8, -0.3}, eta{0.2, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gyro_kernel_gradients(xi, eta, p));
  }
}
BENCHMARK(KernelGradients);

void DirectFields(benchmark::State& state) {
  const Ensemble ens = make_ensemble(static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_fields(ens));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(DirectFields)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void TreeBuild(benchmark::State& state) {
  const Ensemble ens = make_ensemble(static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) {
    VelocityTree tree(ens);
    benchmark::DoNotOptimize(tree);
  }
}
BENCHMARK(TreeBuild)->RangeMultiplier(4)->Range(256, 4096);

void TreeVelocities(benchmark::State& state) {
  const Ensemble ens = make_ensemble(static_cast<std::size_t>(state.range(0)), 0.05);
  const VelocityTree tree(ens);
  for (auto _ : state) {
    Vec2 acc{0, 0};
    for (std::size_t j = 0; j < ens.size(); ++j) {
      acc += tree.velocity_at(j, 0.5);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(TreeVelocities)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void DirectVelocities(benchmark::State& state) {
  const Ensemble ens = make_ensemble(static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) {
    Vec2 acc{0, 0};
    for (std::size_t j = 0; j < ens.size(); ++j) {
      acc += velocity_field(ens, j);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(DirectVelocities)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
