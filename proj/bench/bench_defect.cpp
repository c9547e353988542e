// Serial reference vs OpenMP kernels for the defect scan and batch evaluation.

#include <benchmark/benchmark.h>

#include "qm/cayley.hpp"
#include "qm/config.hpp"
#include "qm/defect.hpp"

using namespace qm;

namespace {

const AmalgamInstance& sl() {
  static const auto inst = builtin_instance("sl2z");
  return std::get<AmalgamInstance>(inst.model);
}

void defect_random(benchmark::State& state, Execution exec) {
  const auto& m = sl().presentation;
  const Pattern pat(m, build_wi_amalgam(sl().family, 0));
  const DefectStrategy s = RandomStrategy{state.range(0), 50, 42};
  for (auto _ : state) benchmark::DoNotOptimize(defect_scan(m, pat, s, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void values_ball(benchmark::State& state, Execution exec) {
  const auto& m = sl().presentation;
  const Pattern pat(m, build_wi_amalgam(sl().family, 0));
  std::vector<AElement> elements;
  for (const auto& [g, d] : cayley_ball(m, static_cast<int>(state.range(0)))) elements.push_back(g);
  for (auto _ : state) benchmark::DoNotOptimize(qm_values(m, elements, pat, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(elements.size()));
}

}  // namespace

BENCHMARK_CAPTURE(defect_random, serial, Execution::kSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(defect_random, parallel, Execution::kParallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(values_ball, serial, Execution::kSerial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(values_ball, parallel, Execution::kParallel)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
