#include <benchmark/benchmark.h>

#include "piradiance/constants_fit.hpp"
#include "piradiance/radiation_laws.hpp"

namespace pr = piradiance;

namespace {

void BM_SampleSpectrum(benchmark::State& state) {
  const auto law = pr::laws::planck();
  const auto grid = pr::log_grid(1e8, 1e12, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr::sample_spectrum(law, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleSpectrum)->Arg(512)->Arg(4096);

void BM_EvaluateCriteria(benchmark::State& state) {
  const auto law = pr::laws::planck();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr::evaluate_criteria(law));
  }
}
BENCHMARK(BM_EvaluateCriteria);

void BM_VerifyTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr::verify_table1());
  }
}
BENCHMARK(BM_VerifyTable);

}  // namespace
