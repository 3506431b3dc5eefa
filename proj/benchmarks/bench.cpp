#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "berger/generators.hpp"
#include "berger/geometry.hpp"
#include "berger/simulator.hpp"
#include "berger/topology.hpp"

using namespace berger;

namespace {

void BM_NextNode(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    std::vector<Point> nbrs;
    for (int i = 0; i < degree; ++i) {
        const double a = 6.283185307179586 * i / degree + 0.01;
        nbrs.push_back({std::cos(a), std::sin(a)});
    }
    const Point self{0, 0};
    const Point s{-5, 0.3};
    const Point t{5, 0.3};
    for (auto _ : state)
        benchmark::DoNotOptimize(nextNode(nbrs, self, nbrs[0], s, t, Direction::R, std::nullopt));
}
BENCHMARK(BM_NextNode)->Arg(4)->Arg(8)->Arg(32);

void BM_ValidateInstance(benchmark::State& state)
{
    const Instance inst =
        generateFamily(Family::GabrielUnitDisk, static_cast<std::size_t>(state.range(0)), 1).instance;
    for (auto _ : state)
        benchmark::DoNotOptimize(validateInstance(inst));
}
BENCHMARK(BM_ValidateInstance)->Arg(24)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_RunFaultFree(benchmark::State& state)
{
    Scenario sc;
    sc.instance = generateFamily(Family::DoubleRing, static_cast<std::size_t>(state.range(0)), 1).instance;
    sc.message = "bench";
    sc.recordTrace = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(run(sc));
}
BENCHMARK(BM_RunFaultFree)->RangeMultiplier(4)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_RunRandomAdversary(benchmark::State& state)
{
    Scenario sc;
    sc.instance = generateFamily(Family::GabrielUnitDisk, 40, 1).instance;
    sc.message = "bench";
    sc.recordTrace = false;
    const GreenFace green = greenFace(sc.instance);
    NodeId fault = green.nodes.front();
    for (NodeId n : green.nodes)
        if (n != sc.instance.source && n != sc.instance.target)
            fault = n;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        sc.fault = FaultSpec{fault, Strategy::Random, seed, {}};
        sc.schedule.seed = seed++;
        benchmark::DoNotOptimize(run(sc));
    }
}
BENCHMARK(BM_RunRandomAdversary)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
