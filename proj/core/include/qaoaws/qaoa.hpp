#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qaoaws/mixer.hpp"
#include "qaoaws/objective.hpp"
#include "qaoaws/statevector.hpp"

namespace qaoaws {

/// Variational parameters for depth p: one (gamma, beta) pair per round.
struct QaoaParams {
    int p = 0;
    std::vector<double> gammas;
    std::vector<double> betas;

    static QaoaParams zeros(int p) {
        return {p, std::vector<double>(p, 0.0), std::vector<double>(p, 0.0)};
    }
};

struct QaoaResult {
    Statevector final_state;
    double expectation = 0.0;
    double lambda = 0.0; // expectation / c_max
    QaoaParams params;
    long evaluations = 1; // circuit evaluations spent producing this result
};

/// expectation / c_max; requires c_max > 0.
double lambda_of(double expectation, std::int64_t c_max);

/// The alternating sequence with an arbitrary diagonal phase layer:
/// round k applies e^{-i gamma_k diag(phase_costs)} then e^{-i beta_k B}.
Statevector run_layers(Statevector init,
                       std::span<const std::int64_t> phase_costs,
                       const MixerSpec& mixer,
                       const QaoaParams& params);

/// Depth-p run: cost layer first in each round, mixer second. Returns the
/// final state together with <C> and lambda. p = 0 returns init unchanged.
QaoaResult run_qaoa(const Objective& obj,
                    const Statevector& init,
                    const MixerSpec& mixer,
                    const QaoaParams& params);

/// As run_qaoa but with an explicit diagonal for the phase layers, while the
/// expectation and lambda still come from the objective. Used by the toy
/// schedule, whose phase layer is the Z substitute (+1, -1).
QaoaResult run_qaoa_with_phase(const Objective& obj,
                               std::span<const std::int64_t> phase_costs,
                               const Statevector& init,
                               const MixerSpec& mixer,
                               const QaoaParams& params);

} // namespace qaoaws
