#include <benchmark/benchmark.h>

#include "weylalt/altset.hpp"
#include "weylalt/multiplicity.hpp"
#include "weylalt/partition.hpp"
#include "weylalt/qpoly.hpp"
#include "weylalt/rootsys.hpp"

namespace {

using weylalt::Backend;
using weylalt::RankContext;

void BM_kostant_highest_root(benchmark::State& state) {
  const RankContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto value = weylalt::kostant(ctx, ctx.highest_root());
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_kostant_highest_root)->DenseRange(4, 12, 2);

void BM_kostant_q_highest_root(benchmark::State& state) {
  const RankContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto value = weylalt::kostant_q(ctx, ctx.highest_root());
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_kostant_q_highest_root)->DenseRange(4, 12, 2);

void BM_mult_zero_weight(benchmark::State& state, Backend backend) {
  const RankContext ctx(static_cast<int>(state.range(0)));
  const auto zero = weylalt::EpsVector::zero(static_cast<std::size_t>(ctx.n()));
  for (auto _ : state) {
    auto res = weylalt::mult(ctx, ctx.highest_root(), zero, backend);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK_CAPTURE(BM_mult_zero_weight, full, Backend::full_sum)
    ->DenseRange(2, 7, 1)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_mult_zero_weight, pruned, Backend::positivity_pruned)
    ->DenseRange(2, 9, 1)
    ->Unit(benchmark::kMillisecond);

void BM_mult_q_zero_weight(benchmark::State& state, Backend backend) {
  const RankContext ctx(static_cast<int>(state.range(0)));
  const auto zero = weylalt::EpsVector::zero(static_cast<std::size_t>(ctx.n()));
  for (auto _ : state) {
    auto res = weylalt::mult_q(ctx, ctx.highest_root(), zero, backend);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK_CAPTURE(BM_mult_q_zero_weight, full, Backend::full_sum)
    ->DenseRange(2, 7, 1)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_mult_q_zero_weight, pruned, Backend::positivity_pruned)
    ->DenseRange(2, 9, 1)
    ->Unit(benchmark::kMillisecond);

void BM_altset_enumerated(benchmark::State& state) {
  const RankContext ctx(static_cast<int>(state.range(0)));
  const auto zero = weylalt::EpsVector::zero(static_cast<std::size_t>(ctx.n()));
  for (auto _ : state) {
    auto set = weylalt::alternation_set(ctx, ctx.highest_root(), zero);
    benchmark::DoNotOptimize(set.cardinality());
  }
}
BENCHMARK(BM_altset_enumerated)->DenseRange(2, 8, 1)->Unit(benchmark::kMillisecond);

void BM_altset_closed(benchmark::State& state) {
  const RankContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto set = weylalt::zero_weight_alternation_set(ctx);
    benchmark::DoNotOptimize(set.cardinality());
  }
}
BENCHMARK(BM_altset_closed)->DenseRange(4, 20, 4);

void BM_fibonacci_polynomial(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto poly = weylalt::fibonacci_polynomial(r);
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_fibonacci_polynomial)->Arg(50)->Arg(100)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
