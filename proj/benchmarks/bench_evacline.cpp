#include <benchmark/benchmark.h>

#include "evacline/analysis.hpp"
#include "evacline/engine.hpp"
#include "evacline/plans.hpp"
#include "evacline/rays.hpp"

using namespace evacline;

static void BM_RaysTrajectory(benchmark::State& state) {
    const double horizon = receiver_turn_time(0.228652, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Trajectory traj = rays_trajectory({1, 0.51575, 0.10461, 3.59286}, horizon);
        benchmark::DoNotOptimize(traj.vertices().data());
    }
}
BENCHMARK(BM_RaysTrajectory)->Arg(11)->Arg(27);

static void BM_SimulateOneOne(benchmark::State& state) {
    EvacPlan plan = plan_one_one();
    for (auto _ : state) {
        EvacOutcome out = simulate(plan, 37.5);
        benchmark::DoNotOptimize(out.evac_time);
    }
}
BENCHMARK(BM_SimulateOneOne);

static void BM_SimulateRays(benchmark::State& state) {
    EvacPlan plan = plan_evac_rays(0.228652);
    const double x = right_sender_turning_point(0.228652, 8).position * 1.3;
    for (auto _ : state) {
        EvacOutcome out = simulate(plan, x);
        benchmark::DoNotOptimize(out.evac_time);
    }
}
BENCHMARK(BM_SimulateRays);

static void BM_SweepRays(benchmark::State& state) {
    EvacPlan plan = plan_evac_rays(0.228652);
    auto targets = default_sweep_targets(plan, 1.01, 100.0,
                                         static_cast<int>(state.range(0)), 6);
    for (auto _ : state) {
        CrReport report = cr_sweep(plan, targets, plan_cr_bound(plan));
        benchmark::DoNotOptimize(report.empirical_sup);
    }
}
BENCHMARK(BM_SweepRays)->Arg(50)->Arg(200);

static void BM_OptimizeVr(benchmark::State& state) {
    for (auto _ : state) {
        VrOptimum best = optimize_vr(1e-10);
        benchmark::DoNotOptimize(best.cr);
    }
}
BENCHMARK(BM_OptimizeVr);

BENCHMARK_MAIN();
