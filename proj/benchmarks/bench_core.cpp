#include <benchmark/benchmark.h>

#include "graphonlab/densities.hpp"
#include "graphonlab/group.hpp"
#include "graphonlab/spectral.hpp"
#include "graphonlab/symmetry.hpp"

namespace {

glab::Graphon winding_graphon(int N) {
    return glab::cayley_graphon(glab::cyclic_group(N),
                                glab::winding_kernel_profile(1, {8}, N));
}

void BM_HomDensityTriangle(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    auto g = winding_graphon(N);
    glab::DensityOptions opts;
    opts.override_caps = true;
    for (auto _ : state)
        benchmark::DoNotOptimize(glab::hom_density_exact(glab::patterns::triangle(), g, opts));
    state.SetComplexityN(N);
}
BENCHMARK(BM_HomDensityTriangle)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_HomDensityMc(benchmark::State& state) {
    auto g = winding_graphon(128);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            glab::hom_density_mc(glab::patterns::triangle(), g, state.range(0), 42));
}
BENCHMARK(BM_HomDensityMc)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Eigendecompose(benchmark::State& state) {
    auto g = winding_graphon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(glab::eigendecompose(g));
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(32, 512);

void BM_TruncateGraphon(benchmark::State& state) {
    auto g = winding_graphon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(glab::truncate_graphon(g, 0.1));
}
BENCHMARK(BM_TruncateGraphon)->Arg(64)->Arg(256);

void BM_GraphonAutomorphisms(benchmark::State& state) {
    auto G = glab::cyclic_group(static_cast<int>(state.range(0)));
    auto g = glab::cayley_graphon(G, glab::biinvariant_profile(G));
    for (auto _ : state) benchmark::DoNotOptimize(glab::graphon_automorphisms(g));
}
BENCHMARK(BM_GraphonAutomorphisms)->Arg(8)->Arg(16)->Arg(32);

void BM_FruchtAutomorphisms(benchmark::State& state) {
    auto graph = glab::frucht_realize(glab::cyclic_group(static_cast<int>(state.range(0))), {1});
    glab::AutomorphismOptions opts;
    opts.pruned_cap = 256;
    for (auto _ : state) benchmark::DoNotOptimize(glab::graph_automorphisms(graph, opts));
}
BENCHMARK(BM_FruchtAutomorphisms)->Arg(3)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
