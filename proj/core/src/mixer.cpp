#include "qaoaws/mixer.hpp"

#include <cmath>

#include "qaoaws/errors.hpp"

namespace qaoaws {

MixerSpec transverse_field_mixer(int num_qubits, bool shifted) {
    if (num_qubits < 1) {
        throw InvalidInputError("mixer needs at least one qubit");
    }
    MixerSpec spec;
    spec.kind = MixerKind::transverse_field;
    spec.shifted = shifted;
    spec.axes.assign(static_cast<std::size_t>(num_qubits), BlochVector{1.0, 0.0, 0.0});
    return spec;
}

Statevector apply_mixer(Statevector state, const MixerSpec& mixer, double beta) {
    if (mixer.num_qubits() != state.num_qubits()) {
        throw InvalidInputError("mixer qubit count does not match state");
    }
    // e^{-i beta B_hat} = e^{-i beta n / 2} prod_j e^{+i (beta/2) B_{n_j, j}}
    const double per_qubit_beta = mixer.shifted ? -beta / 2.0 : beta;
    for (int j = 0; j < state.num_qubits(); ++j) {
        state = apply_single_qubit_axis_rotation(std::move(state), j,
                                                 mixer.axes[static_cast<std::size_t>(j)],
                                                 per_qubit_beta);
    }
    if (mixer.shifted) {
        const cx_double phase =
            std::polar(1.0, -beta * static_cast<double>(state.num_qubits()) / 2.0);
        for (std::size_t k = 0; k < state.dim(); ++k) {
            state[k] *= phase;
        }
    }
    return state;
}

const char* mixer_kind_name(const MixerSpec& mixer) {
    if (mixer.kind == MixerKind::transverse_field) {
        return mixer.shifted ? "transverse-field-shifted" : "transverse-field";
    }
    return mixer.shifted ? "aligned-shifted" : "aligned";
}

} // namespace qaoaws
