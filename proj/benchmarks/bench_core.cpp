// Microbenchmarks for the hot paths: the linear-algebra kernel, single-label
// fits, specification deviance, ordering search, and the inference engines.

#include <benchmark/benchmark.h>

#include "lcc/chain.hpp"
#include "lcc/inference.hpp"
#include "lcc/linalg.hpp"
#include "lcc/ordering.hpp"
#include "lcc/rng.hpp"
#include "lcc/speclink.hpp"
#include "lcc/synthgen.hpp"

namespace {

lcc::Matrix random_spd(std::size_t d) {
    lcc::Rng rng(7, 0);
    lcc::Matrix a(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    lcc::Matrix spd(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double s = i == j ? static_cast<double>(d) : 0.0;
            for (std::size_t k = 0; k < d; ++k) s += a(k, i) * a(k, j);
            spd(i, j) = s;
        }
    return spd;
}

const lcc::Dataset& m1_data(std::size_t n) {
    static const lcc::Dataset small = lcc::sample(lcc::model_spec("M1"), 500, 7, 1);
    static const lcc::Dataset large = lcc::sample(lcc::model_spec("M1"), 4000, 7, 2);
    return n <= 500 ? small : large;
}

void BM_cholesky_solve(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const lcc::Matrix a = random_spd(d);
    lcc::Rng rng(7, 1);
    lcc::Vector b(d);
    for (double& v : b) v = rng.uniform(-1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(lcc::cholesky_solve(a, b));
}
BENCHMARK(BM_cholesky_solve)->Arg(8)->Arg(32)->Arg(128);

void BM_logistic_fit(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const lcc::Dataset& ds = m1_data(n);
    lcc::Matrix z(n, ds.X.cols());
    lcc::Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ds.X.cols(); ++j) z(i, j) = ds.X(i, j);
        y[i] = ds.Y(i, 0);
    }
    for (auto _ : state) benchmark::DoNotOptimize(lcc::fit(z, y, 0.001));
}
BENCHMARK(BM_logistic_fit)->Arg(500)->Arg(4000);

void BM_spec_deviance(benchmark::State& state) {
    const lcc::Dataset& ds = m1_data(500);
    lcc::Vector y(ds.rows());
    for (std::size_t i = 0; i < ds.rows(); ++i) y[i] = ds.Y(i, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            lcc::spec_deviance(ds.X, y, 0.001, lcc::CarrierFamily::pregibon));
}
BENCHMARK(BM_spec_deviance);

void BM_find_ordering(benchmark::State& state) {
    const lcc::Dataset& ds = m1_data(500);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            lcc::find_ordering(ds.X, ds.Y, lcc::CarrierFamily::pregibon, 0.001));
}
BENCHMARK(BM_find_ordering);

void BM_train_chain(benchmark::State& state) {
    const lcc::Dataset& ds = m1_data(500);
    const std::vector<std::size_t> pi{1, 0};
    for (auto _ : state) benchmark::DoNotOptimize(lcc::train_chain(ds.X, ds.Y, pi, 0.001));
}
BENCHMARK(BM_train_chain);

void BM_inference(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    lcc::ChainSpec spec = lcc::model_spec("M12");
    spec.thetas.resize(k);
    const lcc::ChainModel model = lcc::exact_chain(spec);
    const lcc::Dataset ds = lcc::sample(spec, 64, 7, 3);
    std::size_t i = 0;
    const int engine = static_cast<int>(state.range(1));
    for (auto _ : state) {
        const auto x = ds.X.row(i);
        i = (i + 1) % ds.rows();
        switch (engine) {
            case 0: benchmark::DoNotOptimize(lcc::exhaustive_mode(model, x)); break;
            case 1: benchmark::DoNotOptimize(lcc::greedy_mode(model, x)); break;
            default: benchmark::DoNotOptimize(lcc::beam_mode(model, x, 2)); break;
        }
    }
}
BENCHMARK(BM_inference)
    ->ArgsProduct({{4, 8, 10}, {0, 1, 2}})
    ->ArgNames({"labels", "engine"});

void BM_sample(benchmark::State& state) {
    const lcc::ChainSpec spec = lcc::model_spec("M2");
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uint64_t stream = 0;
    for (auto _ : state) benchmark::DoNotOptimize(lcc::sample(spec, n, 7, ++stream));
}
BENCHMARK(BM_sample)->Arg(500)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
