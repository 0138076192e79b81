#include <benchmark/benchmark.h>

#include "cnets/algebras.hpp"
#include "cnets/oracle.hpp"

using namespace cnets;

namespace {

const gf::FieldCtx& field5() {
    static auto F = gf::FieldCtx::make_all(5);
    return F;
}

void BM_FieldMul(benchmark::State& state) {
    const auto& F = field5();
    const int level = static_cast<int>(state.range(0));
    auto a = F.gen(level) + F.one(level);
    auto b = F.gen(level);
    for (auto _ : state) {
        b = a * b;
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

void BM_NetDisc(benchmark::State& state) {
    const auto& F = field5();
    auto W = nets::random_net(F, 42);
    for (auto _ : state) benchmark::DoNotOptimize(nets::net_disc(F, W));
}
BENCHMARK(BM_NetDisc);

void BM_ClassifyCubicNonsingular(benchmark::State& state) {
    const auto& F = field5();
    auto f = forms::cubic_from_ints(F, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(taxonomy::classify_cubic(F, f));
}
BENCHMARK(BM_ClassifyCubicNonsingular);

void BM_ClassifyCubicSingular(benchmark::State& state) {
    const auto& F = field5();
    auto f = forms::cubic_from_ints(F, {0, 0, 0, 0, 1, 0, -1, 0, 0, -1});
    for (auto _ : state) benchmark::DoNotOptimize(taxonomy::classify_cubic(F, f));
}
BENCHMARK(BM_ClassifyCubicSingular);

void BM_ClassifyNet(benchmark::State& state) {
    const auto& F = field5();
    std::vector<nets::Net> ws;
    for (int i = 0; i < 64; ++i) ws.push_back(nets::random_net(F, 9000 + i));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nets::classify_net(F, ws[i++ % ws.size()]));
    }
}
BENCHMARK(BM_ClassifyNet);

void BM_HasRankOne(benchmark::State& state) {
    const auto& F = field5();
    auto reps = nets::representatives(F);
    for (auto _ : state) benchmark::DoNotOptimize(nets::has_rank_one(F, reps[5]));
}
BENCHMARK(BM_HasRankOne);

void BM_StructureConstants(benchmark::State& state) {
    const auto& F = field5();
    auto W = nets::random_net(F, 4242);
    for (auto _ : state) benchmark::DoNotOptimize(algebras::structure_constants(F, W));
}
BENCHMARK(BM_StructureConstants);

void BM_OrbitStep(benchmark::State& state) {
    const auto& F = field5();
    auto W = nets::random_net(F, 4243);
    auto M = nets::random_gl3(F, 7);
    for (auto _ : state) {
        W = nets::act(F, M, W);
        benchmark::DoNotOptimize(W);
    }
}
BENCHMARK(BM_OrbitStep);

} // namespace

BENCHMARK_MAIN();
