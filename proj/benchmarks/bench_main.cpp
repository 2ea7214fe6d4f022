#include <benchmark/benchmark.h>

#include "partcrt/arith.hpp"
#include "partcrt/identities.hpp"
#include "partcrt/partitions.hpp"
#include "partcrt/series.hpp"

namespace {

using partcrt::Ring;
using partcrt::u64;

// 200 binomial factors at high order: the cost model is one bignum add per
// retained coefficient per factor.
void BM_ProductOfFactors(benchmark::State& state) {
    const auto order = (std::size_t)state.range(0);
    std::vector<partcrt::SeriesFactor> factors;
    for (u64 j = 1; j <= 100; ++j) {
        factors.push_back(partcrt::den_factor(j));
        factors.push_back(partcrt::num_factor(2 * j));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(partcrt::product_of_factors(order, Ring::exact(), factors));
    }
}
BENCHMARK(BM_ProductOfFactors)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_PartitionP(benchmark::State& state) {
    const auto n = (std::size_t)state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partcrt::partition_p(n));
    }
}
BENCHMARK(BM_PartitionP)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_CountRestrictedWorkedExample(benchmark::State& state) {
    partcrt::CrtBuildParams params;
    params.system.moduli = {2, 3, 5};
    params.system.offsets = {1, 1, 1};
    const partcrt::IdentityInstance inst = partcrt::build_crt(params);
    const auto n = (std::size_t)state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partcrt::count_restricted(inst.multiplicities, n));
    }
}
BENCHMARK(BM_CountRestrictedWorkedExample)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CrtSolve(benchmark::State& state) {
    partcrt::CrtParams params;
    params.moduli = {4, 9, 25, 7, 11, 13};
    params.offsets = {3, 2, 7, 4, 9, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partcrt::crt_solve(params));
    }
}
BENCHMARK(BM_CrtSolve);

}  // namespace

BENCHMARK_MAIN();
