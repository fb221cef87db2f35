#include <benchmark/benchmark.h>

#include <random>

#include "signedflips/filler.hpp"
#include "signedflips/flip_graph.hpp"
#include "signedflips/oracle.hpp"
#include "signedflips/triangulation.hpp"

using namespace sdf;

namespace {

FlipSequence random_sequence(std::mt19937& rng, int n, int len) {
    auto pool = enumerate_triangulations(n);
    std::uniform_int_distribution<size_t> start_dist(0, pool.size() - 1);
    PolygonTriangulation cur = pool[start_dist(rng)];
    PolygonTriangulation start = cur;
    std::vector<Edge> diagonals;
    for (int i = 0; i < len; ++i) {
        auto diags = cur.diagonals();
        std::uniform_int_distribution<size_t> pick(0, diags.size() - 1);
        Edge d = diags[pick(rng)];
        diagonals.push_back(d);
        cur = apply_flip(cur, d).first;
    }
    return make_sequence(start, diagonals);
}

}  // namespace

static void BM_BuildFlipGraph(benchmark::State& state) {
    std::mt19937 rng(1);
    auto s = random_sequence(rng, 10, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_flip_graph(s));
}
BENCHMARK(BM_BuildFlipGraph)->Arg(8)->Arg(16)->Arg(32);

static void BM_IsSignable(benchmark::State& state) {
    std::mt19937 rng(2);
    auto s = random_sequence(rng, 10, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_signable(s));
}
BENCHMARK(BM_IsSignable)->Arg(8)->Arg(16)->Arg(32);

static void BM_Oracle(benchmark::State& state) {
    std::mt19937 rng(3);
    auto s = random_sequence(rng, 8, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_signable(s));
}
BENCHMARK(BM_Oracle)->Arg(4)->Arg(8);

static void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_triangulations(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(10)->Arg(12);

static void BM_FindFlipPath(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto pool = enumerate_triangulations(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_flip_path(pool.front(), pool.back()));
}
BENCHMARK(BM_FindFlipPath)->Arg(8)->Arg(10);

static void BM_FillDisk(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<Vertex> cycle(m);
    ColorMap col;
    for (int i = 0; i < m; ++i) {
        cycle[i] = i + 1;
        col[i + 1] = i % 2 == 0 ? (i % 4 == 0 ? 0 : 2) : 1;  // alternating proper pattern
    }
    col[m] = 2;  // close the cycle properly for even m
    for (auto _ : state) benchmark::DoNotOptimize(fill_disk_2d(cycle, col));
}
BENCHMARK(BM_FillDisk)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
