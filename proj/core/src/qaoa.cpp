#include "qaoaws/qaoa.hpp"

#include <cmath>

#include "qaoaws/errors.hpp"

namespace qaoaws {

double lambda_of(double expectation, std::int64_t c_max) {
    if (c_max <= 0) {
        throw InvalidInputError("c_max must be positive");
    }
    return expectation / static_cast<double>(c_max);
}

Statevector run_layers(Statevector init,
                       std::span<const std::int64_t> phase_costs,
                       const MixerSpec& mixer,
                       const QaoaParams& params) {
    if (params.p < 0) {
        throw InvalidInputError("depth must be non-negative");
    }
    if (params.gammas.size() != static_cast<std::size_t>(params.p) ||
        params.betas.size() != static_cast<std::size_t>(params.p)) {
        throw InvalidInputError("gamma/beta lengths must equal the depth");
    }
    for (int k = 0; k < params.p; ++k) {
        if (!std::isfinite(params.gammas[static_cast<std::size_t>(k)]) ||
            !std::isfinite(params.betas[static_cast<std::size_t>(k)])) {
            throw InvalidInputError("non-finite variational parameter");
        }
    }

    Statevector state = std::move(init);
    for (int k = 0; k < params.p; ++k) {
        state = apply_phase_separator(std::move(state), phase_costs,
                                      params.gammas[static_cast<std::size_t>(k)]);
        state = apply_mixer(std::move(state), mixer,
                            params.betas[static_cast<std::size_t>(k)]);
    }
    return state;
}

QaoaResult run_qaoa(const Objective& obj,
                    const Statevector& init,
                    const MixerSpec& mixer,
                    const QaoaParams& params) {
    return run_qaoa_with_phase(obj, cost_diagonal(obj), init, mixer, params);
}

QaoaResult run_qaoa_with_phase(const Objective& obj,
                               std::span<const std::int64_t> phase_costs,
                               const Statevector& init,
                               const MixerSpec& mixer,
                               const QaoaParams& params) {
    if (obj.num_bits != init.num_qubits()) {
        throw InvalidInputError("objective bit count does not match state");
    }
    QaoaResult result{run_layers(init, phase_costs, mixer, params), 0.0, 0.0, params, 1};
    result.expectation = expectation_diag(result.final_state, cost_diagonal(obj));
    result.lambda = lambda_of(result.expectation, obj.c_max);
    return result;
}

} // namespace qaoaws
