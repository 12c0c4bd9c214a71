#include <benchmark/benchmark.h>

#include <random>

#include "milnor/braid.hpp"
#include "milnor/classify.hpp"
#include "milnor/diagram.hpp"
#include "milnor/invariants.hpp"
#include "milnor/magnus.hpp"

using namespace milnor;

namespace {

TruncatedSeries dense_series(int vars, int bound, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> var(1, vars);
    TruncatedSeries s = TruncatedSeries::one(bound);
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> deg(0, bound);
        TruncatedSeries term = TruncatedSeries::constant(coeff(rng), bound);
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) term = term * TruncatedSeries::variable(var(rng), bound);
        s += term;
    }
    return s;
}

void BM_SeriesMultiply(benchmark::State& state) {
    const TruncatedSeries a = dense_series(4, 5, 1);
    const TruncatedSeries b = dense_series(4, 5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply);

void BM_MagnusCommutator(benchmark::State& state) {
    GroupWord w = GroupWord::generator(4);
    for (int t = 3; t >= 1; --t) w = GroupWord::commutator(GroupWord::generator(t), w);
    for (auto _ : state) benchmark::DoNotOptimize(magnus_expand(w, 5));
}
BENCHMARK(BM_MagnusCommutator);

void BM_MuTableTorus(benchmark::State& state) {
    const StringLinkDiagram d = braid_to_diagram(parse_braid("m=2: s1^8"));
    for (auto _ : state) benchmark::DoNotOptimize(mu_table(d, 3, false));
}
BENCHMARK(BM_MuTableTorus);

void BM_MuTableFourStrands(benchmark::State& state) {
    const StringLinkDiagram d =
        braid_to_diagram(parse_braid("m=4: s1^2 s2^2 s3^2 s2^-2 s1^2 s3^2"));
    for (auto _ : state) benchmark::DoNotOptimize(mu_table(d, 4, true));
}
BENCHMARK(BM_MuTableFourStrands);

void BM_CanonicalFormBorromean(benchmark::State& state) {
    const StringLinkDiagram d = winding_to_diagram(
        {3, GroupWord::commutator(GroupWord::generator(1), GroupWord::generator(2))}, 3);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d, 2));
}
BENCHMARK(BM_CanonicalFormBorromean);

}  // namespace

BENCHMARK_MAIN();
