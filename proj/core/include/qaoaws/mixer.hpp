#pragma once

#include <vector>

#include "qaoaws/bloch.hpp"
#include "qaoaws/statevector.hpp"

namespace qaoaws {

enum class MixerKind {
    transverse_field,
    aligned,
};

/// A sum-of-single-qubit mixing Hamiltonian B = sum_j n_j . (X, Y, Z)_j,
/// optionally in shifted form B_hat = (n I - B) / 2 which has eigenvalues
/// 0..n instead of -n..n.
struct MixerSpec {
    MixerKind kind = MixerKind::transverse_field;
    std::vector<BlochVector> axes; // one unit axis per qubit
    bool shifted = false;

    int num_qubits() const { return static_cast<int>(axes.size()); }
};

/// Axes all (1, 0, 0).
MixerSpec transverse_field_mixer(int num_qubits, bool shifted = false);

/// e^{-i beta B}. The per-qubit terms commute, so this is the product of the
/// single-qubit axis rotations. For the shifted form it is the same product
/// with per-qubit angle -beta/2 times the global phase e^{-i beta n / 2}.
Statevector apply_mixer(Statevector state, const MixerSpec& mixer, double beta);

const char* mixer_kind_name(const MixerSpec& mixer);

} // namespace qaoaws
