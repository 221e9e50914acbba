#include <benchmark/benchmark.h>

#include "bookdec/bookdecomp.hpp"
#include "bookdec/canonical.hpp"
#include "bookdec/constructions.hpp"
#include "bookdec/count.hpp"
#include "bookdec/enumerate.hpp"
#include "bookdec/identities.hpp"
#include "bookdec/indices.hpp"

using namespace bookdec;

static void BM_canonical_code(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 1, 7);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_canonical_code)->Arg(8)->Arg(10)->Arg(12);

static void BM_count_triangles(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 1, 7);
    Graph k3 = complete_graph(3);
    for (auto _ : state) benchmark::DoNotOptimize(count_subgraphs(k3, g));
}
BENCHMARK(BM_count_triangles)->Arg(10)->Arg(12);

static void BM_count_bulls(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 1, 7);
    Graph bull = bull_graph();
    for (auto _ : state) benchmark::DoNotOptimize(count_subgraphs(bull, g));
}
BENCHMARK(BM_count_bulls)->Arg(10)->Arg(12);

static void BM_iso_classes(benchmark::State& state) {
    Constraints none;
    for (auto _ : state) benchmark::DoNotOptimize(iso_classes(static_cast<int>(state.range(0)), none));
}
BENCHMARK(BM_iso_classes)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_book_weights(benchmark::State& state) {
    IndexDef def = make_index("HM2");
    for (auto _ : state) benchmark::DoNotOptimize(book_weights(def));
}
BENCHMARK(BM_book_weights);

static void BM_decompose_eval(benchmark::State& state) {
    IndexDef def = make_index("M2");
    WeightTable table = book_weights(def);
    Graph g = random_graph(static_cast<int>(state.range(0)), 1, 7);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_eval(table, g));
}
BENCHMARK(BM_decompose_eval)->Arg(10)->Arg(12);

static void BM_eval_index(benchmark::State& state) {
    IndexDef def = make_index("M2");
    Graph g = random_graph(static_cast<int>(state.range(0)), 1, 7);
    for (auto _ : state) benchmark::DoNotOptimize(eval_index(def, g));
}
BENCHMARK(BM_eval_index)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
