#include <benchmark/benchmark.h>

#include "qaoaws/bounds.hpp"
#include "qaoaws/random_instances.hpp"

namespace {

using namespace qaoaws;

void CommutatorSpectralNorm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const auto sep = PhaseSeparator::from_objective(maxcut_objective(random_graph(rng, n)));
    const auto ws = WarmStart::from_bitstring(std::string(static_cast<std::size_t>(n), '0'), 0.3);
    const Eigen::MatrixXcd h0 = mixer_dense(aligned_mixer(ws, true), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral_norm(commutator(sep.cost_operator(), h0)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(CommutatorSpectralNorm)->DenseRange(2, 8)->Complexity();

void PminPipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const auto sep = PhaseSeparator::from_objective(maxcut_objective(random_graph(rng, n)));
    for (auto _ : state) {
        auto rel = at_theta_relation(sep, 0.2, std::string(static_cast<std::size_t>(n), '0'), 0.5);
        benchmark::DoNotOptimize(rel.ratio);
    }
}
BENCHMARK(PminPipeline)->DenseRange(2, 8);

} // namespace
