#include <benchmark/benchmark.h>

#include "pseudograph/audits.hpp"
#include "pseudograph/constructions.hpp"
#include "pseudograph/oracles.hpp"
#include "pseudograph/random_lab.hpp"
#include "pseudograph/spectral.hpp"

using namespace pseudograph;

static void BM_PaleyBuild(benchmark::State& st) {
  const auto q = static_cast<std::uint32_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(paley(q).m());
}
BENCHMARK(BM_PaleyBuild)->Arg(101)->Arg(1009);

static void BM_LpsBuild(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(lps(17, 13).m());
}
BENCHMARK(BM_LpsBuild)->Unit(benchmark::kMillisecond);

static void BM_DenseSpectrum(benchmark::State& st) {
  const Graph g = paley(static_cast<std::uint32_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(full_spectrum(g).lambda());
}
BENCHMARK(BM_DenseSpectrum)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

static void BM_Lanczos(benchmark::State& st) {
  const Graph g = alon_triangle_free(4);
  for (auto _ : st) benchmark::DoNotOptimize(extremal_lambda(g).lambda);
}
BENCHMARK(BM_Lanczos)->Unit(benchmark::kMillisecond);

static void BM_MixingExhaustive(benchmark::State& st) {
  const Graph g = random_regular(static_cast<std::size_t>(st.range(0)), 3, 1);
  const auto h = compute_header(g);
  for (auto _ : st) benchmark::DoNotOptimize(audit_mixing(g, h, MixingMode::exhaustive).size());
}
BENCHMARK(BM_MixingExhaustive)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ExactAlpha(benchmark::State& st) {
  const Graph g = paley(static_cast<std::uint32_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(exact_alpha(g).value);
}
BENCHMARK(BM_ExactAlpha)->Arg(61)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_SpanningTrees(benchmark::State& st) {
  const Graph g = paley(101);
  for (auto _ : st) benchmark::DoNotOptimize(count_spanning_trees(g));
}
BENCHMARK(BM_SpanningTrees)->Unit(benchmark::kMillisecond);

static void BM_MstTrial(benchmark::State& st) {
  const Graph g = paley(1009);
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(mst_trial(g, ++seed));
}
BENCHMARK(BM_MstTrial)->Unit(benchmark::kMillisecond);

static void BM_FullReport(benchmark::State& st) {
  const Graph g = paley(29);
  for (auto _ : st) benchmark::DoNotOptimize(full_report(g).findings.size());
}
BENCHMARK(BM_FullReport)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
