#include "homcode/fixtures.hpp"
#include "homcode/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace homcode;

namespace {

// Free code of rank k over Z/25 with a Vandermonde-like generator: |C| = 25^k.
LinearCode vandermonde(std::size_t n, std::size_t k) {
    auto R = ChainRing::integer_modular(5, 2);
    std::vector<Word> rows(k, Word(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t v = 1;
            for (std::size_t e = 0; e < i; ++e) v = v * static_cast<std::int64_t>(j + 1) % 25;
            rows[i][j] = R->from_int(v);
        }
    return LinearCode::make(R, n, rows);
}

const LinearCode& pick(int which) {
    static const LinearCode small = paper_fixtures().code("mhd_Z25");
    static const LinearCode medium = vandermonde(12, 4);
    static const LinearCode large = vandermonde(16, 5);
    return which == 0 ? small : which == 1 ? medium : large;
}

void BM_Serial(benchmark::State& state) {
    const LinearCode& c = pick(static_cast<int>(state.range(0)));
    const auto basis = additive_basis(c);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weight_profile_serial(c.ring(), basis, c.length(), c.cardinality()));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.cardinality()));
}

void BM_Parallel(benchmark::State& state) {
    const LinearCode& c = pick(static_cast<int>(state.range(0)));
    const auto basis = additive_basis(c);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weight_profile_parallel(c.ring(), basis, c.length(), c.cardinality()));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.cardinality()));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
