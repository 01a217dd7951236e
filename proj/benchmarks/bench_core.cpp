#include <benchmark/benchmark.h>

#include "isoperiod/expansion.hpp"
#include "isoperiod/quadrature.hpp"
#include "isoperiod/simulate.hpp"

namespace {

using namespace isoperiod;

Potential sample_potential() {
  return Potential({{2, Rational(1)}, {3, rat(-1, 2)}, {4, rat(1, 8)}});
}

void BM_SeriesReversion(benchmark::State& state) {
  Potential V = sample_potential();
  auto order = std::size_t(state.range(0));
  for (auto _ : state) {
    TruncatedSeries b = z_substitution(V, order);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_SeriesReversion)->Arg(8)->Arg(12)->Arg(20);

void BM_CoupledExpansion(benchmark::State& state) {
  PiecewiseSystem sys{Topology::VerticalSwitch, sample_potential(),
                      Potential({{2, Rational(2)}, {4, rat(1, 4)}})};
  for (auto _ : state) {
    PeriodExpansion e = coupled_expansion(sys, std::size_t(state.range(0)));
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_CoupledExpansion)->Arg(8)->Arg(12);

void BM_BranchTimeNumeric(benchmark::State& state) {
  Potential V = sample_potential();
  for (auto _ : state) {
    double t = branch_time_numeric(V, 0.1, Side::Right);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BranchTimeNumeric);

void BM_IntegrateReturn(benchmark::State& state) {
  PiecewiseSystem sys{Topology::VerticalSwitch, sample_potential(),
                      Potential({{2, Rational(1)}})};
  State start{0.0, 0.4};
  for (auto _ : state) {
    OrbitRun run = integrate_return(sys, start);
    benchmark::DoNotOptimize(run.return_time);
  }
}
BENCHMARK(BM_IntegrateReturn);

}  // namespace

BENCHMARK_MAIN();
