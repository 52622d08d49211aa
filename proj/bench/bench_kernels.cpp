// Coloring-sum kernels: serial reference against the OpenMP kernel.
#include <benchmark/benchmark.h>

#include "cqsf/colorings.hpp"

using namespace cqsf;

namespace {

MarkedDiagram sample(int n) {
  // a circular diagram with a strict corner, so every rule kind is exercised
  std::vector<int> a(n, 2);
  AreaSeq s = AreaSeq::validate(a);
  auto corners = corner_edges(s);
  std::set<DirEdge> strict;
  if (!corners.empty()) strict.insert(corners.front());
  return MarkedDiagram::make(s, strict);
}

void BM_coloring_sum(benchmark::State& st, Exec exec) {
  ColoringModel m = llt_model(sample(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(coloring_sum(m, exec));
  st.SetLabel(exec == Exec::reference ? "reference" : "parallel");
}

void BM_chromatic_x(benchmark::State& st) {
  AreaSeq a = AreaSeq::validate({2, 2, 3, 2, 1, 0});
  for (auto _ : st) benchmark::DoNotOptimize(chromatic_qsf(a));
}

}  // namespace

BENCHMARK_CAPTURE(BM_coloring_sum, reference, Exec::reference)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_coloring_sum, parallel, Exec::parallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_chromatic_x)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
