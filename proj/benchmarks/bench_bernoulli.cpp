#include <benchmark/benchmark.h>

#include "bern/bernoulli.hpp"
#include "bern/factorial.hpp"
#include "bern/oracle.hpp"
#include "bern/pi.hpp"
#include "bern/primes.hpp"
#include "bern/vsc.hpp"
#include "bern/zeta.hpp"

namespace {

void BM_Bernoulli(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bern::bernoulli(n).value);
  }
}
BENCHMARK(BM_Bernoulli)->Arg(100)->Arg(1000)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_BernoulliThreads(benchmark::State& state) {
  bern::EngineOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bern::bernoulli(20000, options).value);
  }
}
BENCHMARK(BM_BernoulliThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

// The recurrence the engine replaces; quadratic with growing rationals.
void BM_Recurrence(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    bern::BernoulliTable table(n);
    benchmark::DoNotOptimize(table[n]);
  }
}
BENCHMARK(BM_Recurrence)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_ZetaEuler(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const bern::PrecisionPlan plan = bern::make_plan(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bern::zeta_euler(n, plan).value.value.to_double());
  }
}
BENCHMARK(BM_ZetaEuler)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_TwoPi(benchmark::State& state) {
  const auto digits = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bern::two_pi(digits).value.to_double());
  }
}
BENCHMARK(BM_TwoPi)->Arg(1000)->Arg(61400)->Unit(benchmark::kMillisecond);

void BM_Factorial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bern::factorial(n));
  }
}
BENCHMARK(BM_Factorial)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_VscFraction(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bern::vsc_fraction(n).denominator);
  }
}
BENCHMARK(BM_VscFraction)->Arg(20000)->Arg(5040)->Arg(720720);

void BM_PrimesUpTo(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bern::primes_up_to(static_cast<std::uint64_t>(state.range(0))).size());
  }
}
BENCHMARK(BM_PrimesUpTo)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
