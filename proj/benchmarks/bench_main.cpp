#include <benchmark/benchmark.h>

#include "eg/congruence.hpp"
#include "eg/qcongruence.hpp"

using namespace eg;

namespace {

void BM_CyclotomicSubstitute(benchmark::State& state) {
  const std::uint64_t n = state.range(0);
  const QPoly& phi = cyclotomic(n);
  for (auto _ : state) benchmark::DoNotOptimize(substitute_power(phi, 7));
}
BENCHMARK(BM_CyclotomicSubstitute)->Arg(105)->Arg(210)->Arg(1155);

void BM_QIntegerDivRem(benchmark::State& state) {
  const std::uint64_t n = state.range(0);
  const QPoly dividend = q_integer(n) * q_integer(n / 2) + QPoly(3);
  const QPoly divisor = q_integer(n);
  for (auto _ : state) benchmark::DoNotOptimize(divrem(dividend, divisor));
}
BENCHMARK(BM_QIntegerDivRem)->Arg(60)->Arg(120)->Arg(240);

void BM_GaussCheck(benchmark::State& state) {
  SequenceSpec spec;
  spec.family = "lucas";
  const IntegerSequence seq = make_sequence(spec);
  const std::uint64_t N = state.range(0);
  seq.term(N);  // warm the term cache; measure the divisor-sum checks
  for (auto _ : state) benchmark::DoNotOptimize(check_gauss(seq, N));
}
BENCHMARK(BM_GaussCheck)->Arg(300)->Arg(1000);

void BM_QGaussCheck(benchmark::State& state) {
  QSequenceSpec spec;
  spec.family = "q_spf";
  const QSequence seq = make_qsequence(spec);
  const std::uint64_t N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(q_check_euler_gauss(seq, N));
}
BENCHMARK(BM_QGaussCheck)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
