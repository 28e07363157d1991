#include <benchmark/benchmark.h>

#include "nrm/datagen.hpp"
#include "nrm/rng.hpp"
#include "nrm/selection.hpp"
#include "nrm/solver.hpp"

namespace {

nrm::Dataset bench_dataset(int n, int p, int q, int rank) {
    nrm::NoiseSpec noise;
    noise.variance = 0.1;
    noise.seed = 2;
    return nrm::sample_dataset(nrm::make_shape({nrm::ShapeKind::block_diagonal, p, q, rank}),
                               n, noise, 1);
}

void BM_svt(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    nrm::Xoshiro256pp rng(9);
    nrm::Matrix M(p, p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) M(i, j) = rng.gaussian();
    }
    const double tau = 0.5 * nrm::spectral_norm(M);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrm::svt(M, tau));
    }
}
BENCHMARK(BM_svt)->Arg(16)->Arg(64)->Arg(128);

void BM_adjoint_apply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    nrm::Dataset d = bench_dataset(n, 32, 32, 2);
    nrm::Vector theta = d.response();
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrm::adjoint_apply(d, theta));
    }
}
BENCHMARK(BM_adjoint_apply)->Arg(50)->Arg(200)->Arg(500);

void BM_selection_sequence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    nrm::Dataset d = bench_dataset(n, 32, 32, 2);
    nrm::LossModel ls = nrm::LossModel::least_squares();
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrm::lambda_sequence(nrm::selection_coefficients(d, ls)));
    }
}
BENCHMARK(BM_selection_sequence)->Arg(50)->Arg(200);

void BM_solve(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    nrm::Dataset d = bench_dataset(4 * p, p, p, 2);
    nrm::LossModel ls = nrm::LossModel::least_squares();
    nrm::NrmProblem prob(d, ls, 0.5 * nrm::lambda_max(d, ls));
    nrm::SolverOptions opts;
    opts.gap_tolerance = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nrm::solve_nrm(prob, opts));
    }
}
BENCHMARK(BM_solve)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
