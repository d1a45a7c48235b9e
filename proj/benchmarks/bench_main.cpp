#include <benchmark/benchmark.h>

#include "hpc/analysis.hpp"
#include "hpc/catalog.hpp"
#include "hpc/codes.hpp"
#include "hpc/constructions.hpp"

using namespace hpc;

namespace {

Coloring h12() {
    auto f = complement(attach_faces(hamming_perfect_coloring(2, 3).coloring, 2, 1));
    return flaass_improved(f, 1, 1);
}

void BM_Materialize(benchmark::State& st) {
    auto c = h12();
    for (auto _ : st) benchmark::DoNotOptimize(materialize(c));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * c.shape().size()));
}
BENCHMARK(BM_Materialize)->Unit(benchmark::kMillisecond);

void BM_VerifyFull(benchmark::State& st) {
    auto c = materialize(h12());
    const auto S = predicted_quotient(*c.recipe());
    for (auto _ : st) benchmark::DoNotOptimize(verify_full(c, S));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * c.shape().size()));
}
BENCHMARK(BM_VerifyFull)->Unit(benchmark::kMillisecond);

void BM_VerifySampled(benchmark::State& st) {
    auto c = h12();
    const auto S = predicted_quotient(*c.recipe());
    for (auto _ : st) benchmark::DoNotOptimize(verify_sampled(c, S, 10000, 1));
    st.SetItemsProcessed(st.iterations() * 10000);
}
BENCHMARK(BM_VerifySampled)->Unit(benchmark::kMillisecond);

void BM_WeightRecurrence(benchmark::State& st) {
    const auto S = QuotientMatrix::two(80, 19, 8);
    for (auto _ : st) benchmark::DoNotOptimize(weight_distribution_recurrence(S, 1, GraphShape(40, 3)));
}
BENCHMARK(BM_WeightRecurrence);

void BM_BuildTable(benchmark::State& st) {
    const int q = static_cast<int>(st.range(0)), max = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(build_table(q, max));
}
BENCHMARK(BM_BuildTable)->Args({3, 27})->Args({4, 16})->Args({6, 12})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
