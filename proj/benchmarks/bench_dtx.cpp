#include <benchmark/benchmark.h>

#include "dtx/basis.hpp"
#include "dtx/invert.hpp"
#include "dtx/quadrature.hpp"
#include "dtx/synth.hpp"
#include "dtx/xray.hpp"

static void BM_JacobiRule(benchmark::State& state)
{
    int n = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dtx::jacobi_rule(n, 0.3));
}
BENCHMARK(BM_JacobiRule)->Arg(8)->Arg(32)->Arg(128);

static void BM_BasisBuild(benchmark::State& state)
{
    int n = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dtx::Basis(0.3, n));
}
BENCHMARK(BM_BasisBuild)->Arg(4)->Arg(8)->Arg(16);

static void BM_ForwardSino(benchmark::State& state)
{
    int n = int(state.range(0));
    dtx::Rng rng(1);
    dtx::ModeField f = dtx::random_field(rng, 2, n);
    dtx::GridSpec spec = dtx::default_grid_spec(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(dtx::forward_sino(f, 0.3, spec));
}
BENCHMARK(BM_ForwardSino)->Arg(4)->Arg(8)->Arg(12);

static void BM_SinoProject(benchmark::State& state)
{
    int n = int(state.range(0));
    dtx::Rng rng(2);
    dtx::Basis basis(0.3, n);
    dtx::SinoGrid s = dtx::forward_sino(dtx::random_field(rng, 2, n), 0.3, dtx::default_grid_spec(n, 2));
    auto lattice = dtx::itt_projection_lattice(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(dtx::sino_project(s, lattice, basis));
}
BENCHMARK(BM_SinoProject)->Arg(4)->Arg(8);

static void BM_KernelRecon(benchmark::State& state)
{
    const int n = 6;
    dtx::Rng rng(3);
    dtx::Basis basis(0.3, n);
    dtx::IttForm f = dtx::random_itt(rng, 2, n, basis, false);
    dtx::BoundaryGrid grid = dtx::kernel_grid(0.8, n, 2, 0.3);
    dtx::SinoGrid s = dtx::forward_sino(dtx::itt_weighted_field(f, basis), grid, n + 4);
    std::vector<dtx::cplx> zs = dtx::default_z_grid(0.8, 2, int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dtx::recon_tt_kernel(s, 2, zs, basis));
}
BENCHMARK(BM_KernelRecon)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
