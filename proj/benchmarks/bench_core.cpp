#include <random>

#include <benchmark/benchmark.h>

#include "thetakit/families.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/theta.hpp"

using namespace thetakit;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

void BM_ThetaPaley(benchmark::State& state) {
    const Graph g = construct_family(family::Paley{static_cast<std::size_t>(state.range(0))});
    ThetaSettings s;
    s.srg_cross_check = false;
    for (auto _ : state) benchmark::DoNotOptimize(lovasz_theta(g, s).value);
    state.SetLabel("n=" + std::to_string(g.order()));
}
BENCHMARK(BM_ThetaPaley)->Arg(13)->Arg(29)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_ThetaRandom(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(lovasz_theta(g).value);
}
BENCHMARK(BM_ThetaRandom)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CliqueNumber(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.7, 5);
    for (auto _ : state) benchmark::DoNotOptimize(clique_number(g).value);
}
BENCHMARK(BM_CliqueNumber)->Arg(60)->Arg(120)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Permanent(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::uint8_t> m(side * side);
    for (auto& x : m) x = coin(rng);
    for (auto _ : state) benchmark::DoNotOptimize(permanent(m, side));
}
BENCHMARK(BM_Permanent)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_CharPoly(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(g, MatrixKind::L));
}
BENCHMARK(BM_CharPoly)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
