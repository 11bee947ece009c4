#include "qwalk/asymptotics.hpp"
#include "qwalk/kspace.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/sweep.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace qwalk;

namespace {

const Spinor plus_i{Complex(1 / std::numbers::sqrt2, 0), Complex(0, 1 / std::numbers::sqrt2)};

NodeFunction integrands() {
  static const auto init = fourier_initial(initial_local(plus_i));
  const CoinTrig trig({0.7, 0.4});
  return [trig](double k, std::span<Complex> out) {
    const auto v = asymptotic_integrands(k, trig, init, Parity::even);
    if (!v)
      return false;
    std::copy(v->begin(), v->end(), out.begin());
    return true;
  };
}

void BM_grid_serial(benchmark::State &state) {
  const auto f = integrands();
  for (auto _ : state)
    benchmark::DoNotOptimize(grid_average_serial(f, 3, state.range(0), true));
}

void BM_grid_parallel(benchmark::State &state) {
  const auto f = integrands();
  for (auto _ : state)
    benchmark::DoNotOptimize(grid_average_parallel(f, 3, state.range(0), true));
}

void sweep_with(benchmark::State &state, Execution exec) {
  const auto init = initial_local(plus_i);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep({{0.05, 1.5, n}, {0.05, 1.5, n}}, init, Parity::odd, {}, exec));
}

void BM_sweep_serial(benchmark::State &state) { sweep_with(state, Execution::serial); }
void BM_sweep_parallel(benchmark::State &state) { sweep_with(state, Execution::parallel); }

} // namespace

BENCHMARK(BM_grid_serial)->Arg(4096)->Arg(65536)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_grid_parallel)->Arg(4096)->Arg(65536)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_sweep_serial)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
