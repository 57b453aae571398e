#include <benchmark/benchmark.h>

#include "opuc/asymptotics.hpp"
#include "opuc/entropy.hpp"
#include "opuc/families.hpp"

using namespace opuc;

namespace {

void BM_Roots(benchmark::State& st) {
  auto sys = szego_recursion(prescribed(random_decaying_coefficients(1, 1.0, 0.9, static_cast<int>(st.range(0)))), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(roots(sys.phi.back()));
}
BENCHMARK(BM_Roots)->Arg(16)->Arg(64)->Arg(256);

void BM_SzegoRecursion(benchmark::State& st) {
  const auto a = prescribed(random_decaying_coefficients(2, 1.0, 0.9, static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(szego_recursion(a, st.range(0)));
}
BENCHMARK(BM_SzegoRecursion)->Arg(64)->Arg(256);

void BM_Conjugate(benchmark::State& st) {
  const auto mu = one_plus_cos(static_cast<int>(st.range(0)));
  const auto g = GridFunction::real(mu.density());
  for (auto _ : st) benchmark::DoNotOptimize(harmonic_conjugate(g));
}
BENCHMARK(BM_Conjugate)->Arg(4096)->Arg(65536);

void BM_SchurModel(benchmark::State& st) {
  const auto mu = random_decaying(3, 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(SchurModel(mu));
}
BENCHMARK(BM_SchurModel)->Unit(benchmark::kMillisecond);

void BM_Entropy(benchmark::State& st) {
  const auto mu = one_plus_cos();
  for (auto _ : st) benchmark::DoNotOptimize(entropy(mu, cplx(0.5, 0.3)));
}
BENCHMARK(BM_Entropy);

void BM_ProductFormula(benchmark::State& st) {
  SchurModel m(one_plus_cos());
  for (auto _ : st) benchmark::DoNotOptimize(theorem1_product(m, cplx(0.6, 0.2), static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ProductFormula)->Arg(20)->Arg(400);

void BM_IterateMeasure(benchmark::State& st) {
  SchurModel m(one_plus_cos());
  for (auto _ : st) benchmark::DoNotOptimize(m.iterate_measure(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_IterateMeasure)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_StolzSup(benchmark::State& st) {
  SchurModel m(one_plus_cos());
  for (auto _ : st) benchmark::DoNotOptimize(stolz_sup(m, 0.0, 0.5, 20));
}
BENCHMARK(BM_StolzSup)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
