#include "flowfan/arcs.hpp"
#include "flowfan/dkk.hpp"
#include "flowfan/families.hpp"
#include "flowfan/intflow.hpp"

#include <benchmark/benchmark.h>

using namespace flowfan;

static void BM_Routes_hcp(benchmark::State& state) {
    auto fg = h_cp(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(route_system(fg));
}
BENCHMARK(BM_Routes_hcp)->DenseRange(1, 3);

static void BM_Cliques_xx(benchmark::State& state) {
    auto fg = xx_graph();
    auto rs = route_system(fg);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(rs));
}
BENCHMARK(BM_Cliques_xx);

// cyclic cliques grow like the multinomial volume
static void BM_Cliques_hcp(benchmark::State& state) {
    auto fg = h_cp(2, static_cast<int>(state.range(0)));
    auto rs = route_system(fg);
    std::size_t n = 0;
    for (auto _ : state) {
        auto cl = maximal_cliques(rs);
        n = cl.size();
        benchmark::DoNotOptimize(cl);
    }
    state.counters["cliques"] = static_cast<double>(n);
}
BENCHMARK(BM_Cliques_hcp)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_VolumeFlows_path(benchmark::State& state) {
    auto fg = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(volume_flows(fg));
}
BENCHMARK(BM_VolumeFlows_path)->DenseRange(3, 6);

static void BM_Decompose_xx(benchmark::State& state) {
    auto fg = xx_graph();
    auto rs = route_system(fg);
    QVec f(fg.graph().edge_count(), Rational(0));
    for (const auto& r : rs.routes)
        for (int e : r.edges) f[e] += Rational(1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_flow(fg, rs, f));
}
BENCHMARK(BM_Decompose_xx);

static void BM_MutoperhedronFaces(benchmark::State& state) {
    const int c = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f_vector(c, FaceMode::Noninterfering));
}
BENCHMARK(BM_MutoperhedronFaces)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
