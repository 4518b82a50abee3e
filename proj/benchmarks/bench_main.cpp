#include <benchmark/benchmark.h>

#include "alexbq/catalog.hpp"
#include "alexbq/groebner.hpp"
#include "alexbq/ideals.hpp"
#include "alexbq/invariants.hpp"

using namespace alexbq;

namespace {

const char* const kKnots[] = {"2.1", "example1", "kishino-like", "slavik", "vt2#vt2"};

void BM_Determinant(benchmark::State& state) {
  const PresentationMatrix m = build_matrix(catalog(kKnots[state.range(0)]));
  if (m.rows() != m.cols()) {
    state.SkipWithError("matrix is not square");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_Determinant)->DenseRange(0, 3);

void BM_Minors(benchmark::State& state) {
  const PresentationMatrix m = build_matrix(catalog(kKnots[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(minors(m, m.rows() - 1));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_Minors)->DenseRange(0, 4);

void BM_Buchberger(benchmark::State& state) {
  const PresentationMatrix m = build_matrix(catalog(kKnots[state.range(0)]));
  const std::size_t k = state.range(1);
  const TermOrder order = TermOrder::default_order();
  for (auto _ : state) benchmark::DoNotOptimize(ag_invariant(m, k, order));
  state.SetLabel(std::string(kKnots[state.range(0)]) + " k=" + std::to_string(k));
}
BENCHMARK(BM_Buchberger)->ArgsProduct({{0, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  const Diagram d = catalog("slavik");
  ReportOptions options;
  options.max_k = 2;
  for (auto _ : state) benchmark::DoNotOptimize(compute_report(d, options));
}
BENCHMARK(BM_Report)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
