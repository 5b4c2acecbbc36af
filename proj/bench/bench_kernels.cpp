// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gapot/kernels.hpp"

using namespace gapot;

namespace {

std::vector<double> noise(std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> d(-300.0, 300.0);
  std::vector<double> x(n);
  for (auto& v : x) v = d(gen);
  return x;
}

std::vector<std::size_t> odd_bins(std::size_t periods, int max_order) {
  std::vector<std::size_t> bins{0};
  for (int k = 1; k <= max_order; ++k) bins.push_back(static_cast<std::size_t>(k) * periods);
  return bins;
}

std::vector<kernels::Tone> tones(int max_order) {
  std::vector<kernels::Tone> out;
  for (int k = 1; k <= max_order; ++k) out.push_back({2 * std::numbers::pi * 50 * k, 230.0 / k, 0.1 * k});
  return out;
}

std::vector<double> times(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t m = 0; m < n; ++m) t[m] = static_cast<double>(m) / 15625.0;
  return t;
}

template <auto Fn>
void dft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = noise(n, 1);
  const auto bins = odd_bins(n / 312, 50);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(x, bins));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * bins.size()));
}

template <auto Fn>
void synth(benchmark::State& state) {
  const auto t = times(static_cast<std::size_t>(state.range(0)));
  const auto tl = tones(50);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(1.0, tl, t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.size() * tl.size()));
}

template <auto Fn>
void mean(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = noise(n, 2), y = noise(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(x, y));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

}  // namespace

BENCHMARK(dft<kernels::serial::dft_bins>)->Name("dft_bins/serial")->Arg(3125)->Arg(31250)->Arg(312500);
BENCHMARK(dft<kernels::dft_bins>)->Name("dft_bins/openmp")->Arg(3125)->Arg(31250)->Arg(312500)->UseRealTime();
BENCHMARK(synth<kernels::serial::synthesize>)->Name("synthesize/serial")->Arg(3125)->Arg(312500);
BENCHMARK(synth<kernels::synthesize>)->Name("synthesize/openmp")->Arg(3125)->Arg(312500)->UseRealTime();
BENCHMARK(mean<kernels::serial::mean_product>)->Name("mean_product/serial")->Arg(3125)->Arg(3125000);
BENCHMARK(mean<kernels::mean_product>)->Name("mean_product/openmp")->Arg(3125)->Arg(3125000)->UseRealTime();

BENCHMARK_MAIN();
