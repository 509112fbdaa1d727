#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "surfwind/kernels.hpp"

namespace {

using surfwind::Vec2;
namespace kn = surfwind::kernels;

std::vector<Vec2> random_dirs(std::size_t n) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<Vec2> v(n);
  for (Vec2& e : v) e = {d(rng) + 2.0, d(rng)};
  return v;
}

std::vector<double> random_values(std::size_t n) {
  std::mt19937_64 rng(54321);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& e : v) e = d(rng);
  return v;
}

std::vector<double> uniform_grid(std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k)
    s[k] = static_cast<double>(k) / static_cast<double>(n - 1);
  return s;
}

void bm_direction_angles_serial(benchmark::State& state) {
  auto vel = random_dirs(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(vel.size());
  for (auto _ : state) {
    kn::serial::direction_angles(vel, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_direction_angles_par(benchmark::State& state) {
  auto vel = random_dirs(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(vel.size());
  for (auto _ : state) {
    kn::par::direction_angles(vel, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_block_sum_serial(benchmark::State& state) {
  auto v = random_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    double s = kn::serial::block_sum(v);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_block_sum_par(benchmark::State& state) {
  auto v = random_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    double s = kn::par::block_sum(v);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_cumtrapz_serial(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto s = uniform_grid(n);
  auto f = random_values(n);
  std::vector<double> out(n);
  for (auto _ : state) {
    kn::serial::cumtrapz(s, f, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_cumtrapz_par(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto s = uniform_grid(n);
  auto f = random_values(n);
  std::vector<double> out(n);
  for (auto _ : state) {
    kn::par::cumtrapz(s, f, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bm_direction_angles_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_direction_angles_par)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_block_sum_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_block_sum_par)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_cumtrapz_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_cumtrapz_par)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
