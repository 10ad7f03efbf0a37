#include <benchmark/benchmark.h>

#include <numbers>

#include "qaoaws/mixer.hpp"
#include "qaoaws/objective.hpp"
#include "qaoaws/qaoa.hpp"
#include "qaoaws/random_instances.hpp"

namespace {

using namespace qaoaws;

void PhaseSeparatorLayer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const Objective obj = maxcut_objective(random_graph(rng, n));
    Statevector psi = Statevector::uniform_superposition(n);
    for (auto _ : state) {
        psi = apply_phase_separator(std::move(psi), cost_diagonal(obj), 0.37);
        benchmark::DoNotOptimize(psi);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PhaseSeparatorLayer)->DenseRange(4, 12, 2)->Complexity();

void MixerLayer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const MixerSpec mixer = transverse_field_mixer(n);
    Statevector psi = Statevector::uniform_superposition(n);
    for (auto _ : state) {
        psi = apply_mixer(std::move(psi), mixer, 0.19);
        benchmark::DoNotOptimize(psi);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(MixerLayer)->DenseRange(4, 12, 2)->Complexity();

void DepthFourCircuit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const Objective obj = maxcut_objective(random_graph(rng, n));
    const Statevector init = Statevector::uniform_superposition(n);
    const MixerSpec mixer = transverse_field_mixer(n);
    const QaoaParams params{4, {0.1, 0.2, 0.3, 0.4}, {0.4, 0.3, 0.2, 0.1}};
    for (auto _ : state) {
        auto result = run_qaoa(obj, init, mixer, params);
        benchmark::DoNotOptimize(result.expectation);
    }
}
BENCHMARK(DepthFourCircuit)->DenseRange(4, 10, 2);

} // namespace
