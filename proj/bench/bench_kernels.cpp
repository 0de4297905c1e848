#include <benchmark/benchmark.h>

#include "ffree/adversary.hpp"
#include "ffree/kernels.hpp"

using namespace ffree;

namespace {

void count_free(benchmark::State& state, bool parallel) {
  const PatternGraph tri = parse_pattern("triangle");
  const auto battery = kernels::Battery::make(static_cast<Vertex>(state.range(0)), Seed{1}, 400);
  const double p = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? kernels::count_free_parallel(battery, p, tri)
                                      : kernels::count_free_serial(battery, p, tri));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(battery.size()));
}

void run_trials(benchmark::State& state, bool parallel) {
  const PatternGraph tri = parse_pattern("triangle");
  const Vertex n = static_cast<Vertex>(state.range(0));
  const LemmaConstants c = lemma_constants(tri, n);
  const AlterationExperiment exp(tri, n, c.admissible_p_max);
  const WeightedFamily fam = clique_union_family(n, 4, 16, Seed{2});
  for (auto _ : state) {
    auto records = parallel ? kernels::run_trials_parallel(exp, fam, Seed{3}, 0, 200)
                            : kernels::run_trials_serial(exp, fam, Seed{3}, 0, 200);
    benchmark::DoNotOptimize(records.data());
  }
  state.SetItemsProcessed(state.iterations() * 200);
}

void binomial(benchmark::State& state, bool parallel) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? kernels::count_binomial_at_most_parallel(Seed{1}, 20000, 200, 0.1, 10)
                                      : kernels::count_binomial_at_most_serial(Seed{1}, 20000, 200, 0.1, 10));
  }
  state.SetItemsProcessed(state.iterations() * 20000);
}

}  // namespace

BENCHMARK_CAPTURE(count_free, serial, false)->Arg(32)->Arg(128);
BENCHMARK_CAPTURE(count_free, parallel, true)->Arg(32)->Arg(128);
BENCHMARK_CAPTURE(run_trials, serial, false)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(run_trials, parallel, true)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(binomial, serial, false);
BENCHMARK_CAPTURE(binomial, parallel, true);

BENCHMARK_MAIN();
