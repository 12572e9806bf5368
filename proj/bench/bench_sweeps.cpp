// Serial reference loop against the OpenMP sweep for each suite.
//   ./bench_sweeps --benchmark_filter=thm2

#include <benchmark/benchmark.h>

#include <omp.h>

#include "gtf/ptrig.hpp"
#include "gtf/verify.hpp"

using namespace gtf::verify;

static void run(benchmark::State& state, Suite s, Execution exec) {
  const GridSpec g = default_grid(s);
  std::size_t records = 0;
  for (auto _ : state) {
    const Report r = run_suite(s, g, exec);
    records = r.total;
    benchmark::DoNotOptimize(r.records.data());
  }
  state.counters["records"] = static_cast<double>(records);
  state.counters["threads"] = exec == Execution::Serial ? 1 : omp_get_max_threads();
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * records));
}

#define SUITE_PAIR(tag, suite)                                                       \
  BENCHMARK_CAPTURE(run, tag##_serial, suite, Execution::Serial)->Unit(benchmark::kMillisecond); \
  BENCHMARK_CAPTURE(run, tag##_parallel, suite, Execution::Parallel)->Unit(benchmark::kMillisecond)

SUITE_PAIR(thm1, Suite::Thm1);
SUITE_PAIR(thm2, Suite::Thm2);
SUITE_PAIR(bounds, Suite::Bounds);
SUITE_PAIR(monotone, Suite::Monotone);
SUITE_PAIR(eigen, Suite::Eigen);

// Single evaluations, for scale.
static void arcsin_series(benchmark::State& state) {
  const gtf::PExponent p(3.0);
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtf::arc_fn(gtf::FnKind::ArcSin, p, x));
    x = x > 0.94 ? 0.05 : x + 0.01;
  }
}
BENCHMARK(arcsin_series);

static void sin_inversion(benchmark::State& state) {
  const gtf::PExponent p(3.0);
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtf::fwd_fn(gtf::FnKind::Sin, p, x));
    x = x > 0.94 ? 0.05 : x + 0.01;
  }
}
BENCHMARK(sin_inversion);

BENCHMARK_MAIN();
