#include <benchmark/benchmark.h>

#include "kron/cache.hpp"
#include "kron/characters.hpp"
#include "kron/coefficients.hpp"
#include "kron/identities.hpp"

using namespace kron;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_Symmetry(benchmark::State& state) {
  for (auto _ : state) {
    clear_reduced_kronecker_memo();
    benchmark::DoNotOptimize(check_symmetry(3, mode(state)));
  }
}

void BM_AlternatingSum(benchmark::State& state) {
  for (auto _ : state) {
    clear_reduced_kronecker_memo();
    benchmark::DoNotOptimize(check_alternating_sum(2, {0, 4}, mode(state)));
  }
}

void BM_DaggerIdentity(benchmark::State& state) {
  for (auto _ : state) {
    clear_reduced_kronecker_memo();
    benchmark::DoNotOptimize(check_dagger_identity(5, mode(state)));
  }
}

void BM_Table(benchmark::State& state) {
  for (auto _ : state) {
    clear_reduced_kronecker_memo();
    benchmark::DoNotOptimize(reduced_kronecker_table(2, nullptr, mode(state)));
  }
}

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(n).partitions().size());
}

}  // namespace

// Argument 0 is the serial reference loop, 1 the OpenMP loop.
BENCHMARK(BM_Symmetry)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlternatingSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DaggerIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterTable)->Arg(12)->Arg(18)->Unit(benchmark::kMicrosecond);

int main(int argc, char** argv) {
  // Character tables are built once per process; keep that out of the timings.
  for (int n = 0; n <= 22; ++n) character_table(n);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
