#include <benchmark/benchmark.h>

#include <fstream>

#include "heckeb/a_function.hpp"
#include "heckeb/crystal.hpp"
#include "heckeb/decomposition.hpp"
#include "heckeb/j_induction.hpp"
#include "heckeb/partition.hpp"

namespace {

void BM_EnumerateBipartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto all = heckeb::enumerate_multipartitions(n, 2);
        benchmark::DoNotOptimize(all);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateBipartitions)->DenseRange(4, 12, 2)->Complexity();

void BM_AValue(benchmark::State& state) {
    const heckeb::WeightParams w(2, 1);
    const auto all = heckeb::enumerate_multipartitions(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        long long acc = 0;
        for (const auto& m : all)
            acc += heckeb::a_value(m, w);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_AValue)->DenseRange(4, 10, 2);

void BM_JInduce(benchmark::State& state) {
    const heckeb::WeightParams w(2, 1);
    const auto all = heckeb::enumerate_partitions(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& nu : all)
            benchmark::DoNotOptimize(heckeb::j_induce(nu, w));
    }
}
BENCHMARK(BM_JInduce)->DenseRange(4, 12, 2);

void BM_UglovSet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto members = heckeb::uglov_set(n, {-1, 0}, 2, heckeb::NodeOrder::flotw);
        benchmark::DoNotOptimize(members);
    }
}
BENCHMARK(BM_UglovSet)->DenseRange(2, 8, 2);

void BM_ExtractBasicSet(benchmark::State& state) {
    std::ifstream in(HECKEB_FIXTURE_PATH);
    const auto d = heckeb::DecompositionMatrix::load(in);
    heckeb::AValueMap avals;
    for (const auto& row : d.rows())
        avals.emplace(row, heckeb::a_value(row, heckeb::WeightParams(1, 0)));
    for (auto _ : state) {
        auto result = heckeb::extract_basic_set(d, avals);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_ExtractBasicSet);

}  // namespace

BENCHMARK_MAIN();
