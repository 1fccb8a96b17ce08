#include <benchmark/benchmark.h>

#include "signbal/balance.hpp"
#include "signbal/dynamics.hpp"
#include "signbal/generate.hpp"
#include "signbal/spectral.hpp"

namespace {

using namespace signbal;

SignedGraph draw(std::size_t half, double eta) {
    SSBMParams p;
    p.n1 = half;
    p.n2 = half;
    p.p_in = 0.2;
    p.p_out = 0.02;
    p.eta = eta;
    p.seed = 11;
    return ssbm(p);
}

void BM_Eigendecompose(benchmark::State& state) {
    const auto g = draw(static_cast<std::size_t>(state.range(0)) / 2, 0.1);
    const DenseMatrix m = g.weights();
    for (auto _ : state) benchmark::DoNotOptimize(eigendecompose_symmetric(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_Classify(benchmark::State& state) {
    const auto g = draw(static_cast<std::size_t>(state.range(0)) / 2, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify)->RangeMultiplier(4)->Range(64, 1024);

void BM_Measures(benchmark::State& state) {
    const auto g = draw(static_cast<std::size_t>(state.range(0)) / 2, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(strict_unbalance_contraction(g));
}
BENCHMARK(BM_Measures)->RangeMultiplier(2)->Range(32, 256);

void BM_ExactFrustration(benchmark::State& state) {
    SSBMParams p;
    p.n1 = static_cast<std::size_t>(state.range(0)) / 2;
    p.n2 = static_cast<std::size_t>(state.range(0)) - p.n1;
    p.eta = 0.2;
    p.p_out = 0.3;
    const auto g = ssbm(p);
    for (auto _ : state) benchmark::DoNotOptimize(frustration(g, BalanceTarget::Balanced, FrustrationMode::Exact));
}
BENCHMARK(BM_ExactFrustration)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_RandomWalk(benchmark::State& state) {
    const auto g = draw(static_cast<std::size_t>(state.range(0)) / 2, 0.1);
    const Vector x0 = Vector::Ones(static_cast<Eigen::Index>(g.node_count()));
    for (auto _ : state) benchmark::DoNotOptimize(random_walk_simulate(g, x0, 100));
}
BENCHMARK(BM_RandomWalk)->RangeMultiplier(4)->Range(64, 1024);

void BM_LatticeThreshold(benchmark::State& state) {
    LatticeParams p;
    p.n = static_cast<std::size_t>(state.range(0));
    const auto g = ring_lattice(p);
    ELTConfig cfg;
    cfg.horizon = p.n / 2;
    for (auto _ : state) benchmark::DoNotOptimize(elt_lattice_simulate(g, 0, cfg, BalanceTarget::Balanced));
}
BENCHMARK(BM_LatticeThreshold)->RangeMultiplier(4)->Range(40, 640);

}  // namespace
BENCHMARK_MAIN();
