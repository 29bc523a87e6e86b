#include <benchmark/benchmark.h>

#include "ardeck/deck.hpp"
#include "ardeck/extremal.hpp"
#include "ardeck/family.hpp"
#include "ardeck/graph.hpp"
#include "ardeck/transversal.hpp"

using namespace ardeck;

namespace {

void BM_chromatic_turan(benchmark::State& state) {
    auto g = turan_graph(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_chromatic_turan)->DenseRange(8, 16, 4);

void BM_chromatic_line_k6(benchmark::State& state) {
    // 15-vertex line graph; exercises the branch and bound, not just greedy
    auto k6 = complete_graph(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_decomposition_size(k6, FamilySpec::matchings()));
}
BENCHMARK(BM_chromatic_line_k6);

void BM_maximal_matchings(benchmark::State& state) {
    auto g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_maximal_member(g, FamilySpec::matchings(), [&](const MaximalMember&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_maximal_matchings)->DenseRange(6, 10, 2);

void BM_reduced_chromatic_forests_k7(benchmark::State& state) {
    auto g = complete_graph(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            reduced_chromatic(g, FamilySpec::forests(), ChiMode::exact));
}
BENCHMARK(BM_reduced_chromatic_forests_k7);

void BM_itl(benchmark::State& state) {
    int m = 4, dplus = 3;
    auto d = random_parted_digraph(m, m * dplus + 1, dplus, 97);
    for (auto _ : state) benchmark::DoNotOptimize(itl_transversal(d));
}
BENCHMARK(BM_itl);

void BM_exact_transversal_smd(benchmark::State& state) {
    auto rec = smd_construct(4, 3, SmdVariant::basic, 0);  // skip built-in verify
    for (auto _ : state) benchmark::DoNotOptimize(find_transversal_exact(rec.digraph));
}
BENCHMARK(BM_exact_transversal_smd);

void BM_ex_small_c4(benchmark::State& state) {
    std::vector<SimpleGraph> forbidden = {cycle_graph(4)};
    for (auto _ : state)
        benchmark::DoNotOptimize(ex_exact_small(static_cast<int>(state.range(0)), forbidden));
}
BENCHMARK(BM_ex_small_c4)->DenseRange(5, 7, 1);

void BM_f_exact_k3(benchmark::State& state) {
    auto k3 = complete_graph(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(f_exact_tiny(5, k3, FamilySpec::matchings()));
}
BENCHMARK(BM_f_exact_k3);

}  // namespace

BENCHMARK_MAIN();
