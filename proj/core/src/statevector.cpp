#include "qaoaws/statevector.hpp"

#include <cmath>
#include <string>

#include "qaoaws/errors.hpp"

namespace qaoaws {

namespace {

std::size_t checked_dim(int num_qubits) {
    if (num_qubits < 1) {
        throw InvalidInputError("statevector needs at least one qubit");
    }
    if (num_qubits > kMaxStatevectorQubits) {
        throw SizeGuardError("statevector capped at " + std::to_string(kMaxStatevectorQubits) +
                             " qubits, got " + std::to_string(num_qubits));
    }
    return std::size_t{1} << num_qubits;
}

} // namespace

Statevector::Statevector(int num_qubits)
    : num_qubits_(num_qubits), amps_(checked_dim(num_qubits)) {
    amps_[0] = cx_double{1.0, 0.0};
}

Statevector::Statevector(int num_qubits, std::vector<cx_double> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != checked_dim(num_qubits)) {
        throw InvalidInputError("amplitude vector size does not match qubit count");
    }
}

Statevector Statevector::basis_state(int num_qubits, std::uint64_t index) {
    Statevector state(num_qubits);
    if (index >= state.dim()) {
        throw InvalidInputError("basis index out of range");
    }
    state.amps_[0] = cx_double{0.0, 0.0};
    state.amps_[index] = cx_double{1.0, 0.0};
    return state;
}

Statevector Statevector::uniform_superposition(int num_qubits) {
    Statevector state(num_qubits);
    const double amp = 1.0 / std::sqrt(static_cast<double>(state.dim()));
    for (auto& a : state.amps_) {
        a = cx_double{amp, 0.0};
    }
    return state;
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const auto& a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> probs(amps_.size());
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        probs[k] = std::norm(amps_[k]);
    }
    return probs;
}

Statevector apply_phase_separator(Statevector state,
                                  std::span<const std::int64_t> costs,
                                  double gamma) {
    if (costs.size() != state.dim()) {
        throw InvalidInputError("cost diagonal size does not match state dimension");
    }
    if (!std::isfinite(gamma)) {
        throw InvalidInputError("non-finite gamma");
    }
    for (std::size_t k = 0; k < state.dim(); ++k) {
        state[k] *= std::polar(1.0, -gamma * static_cast<double>(costs[k]));
    }
    return state;
}

Statevector apply_single_qubit_axis_rotation(Statevector state,
                                             int qubit,
                                             const BlochVector& axis,
                                             double beta) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw InvalidInputError("qubit index out of range");
    }
    if (!axis.is_unit()) {
        throw InvalidInputError("rotation axis is not a unit vector");
    }
    if (!std::isfinite(beta)) {
        throw InvalidInputError("non-finite beta");
    }

    // e^{-i beta (n . sigma)} = cos(beta) I - i sin(beta) (x X + y Y + z Z)
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const cx_double u00{c, -s * axis.z};
    const cx_double u01{-s * axis.y, -s * axis.x};
    const cx_double u10{s * axis.y, -s * axis.x};
    const cx_double u11{c, s * axis.z};

    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::uint64_t dim = state.dim();
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & bit) {
            continue;
        }
        const std::uint64_t k0 = base;
        const std::uint64_t k1 = base | bit;
        const cx_double a0 = state[k0];
        const cx_double a1 = state[k1];
        state[k0] = u00 * a0 + u01 * a1;
        state[k1] = u10 * a0 + u11 * a1;
    }
    return state;
}

double expectation_diag(const Statevector& state, std::span<const std::int64_t> costs) {
    if (costs.size() != state.dim()) {
        throw InvalidInputError("cost diagonal size does not match state dimension");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < state.dim(); ++k) {
        sum += static_cast<double>(costs[k]) * state.probability(k);
    }
    return sum;
}

double total_variation_distance(const Statevector& a, const Statevector& b) {
    if (a.dim() != b.dim()) {
        throw InvalidInputError("state dimensions differ");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        sum += std::abs(a.probability(k) - b.probability(k));
    }
    return 0.5 * sum;
}

BlochVector single_qubit_bloch(const Statevector& state) {
    if (state.num_qubits() != 1) {
        throw InvalidInputError("Bloch coordinates are defined for one qubit");
    }
    const cx_double a = state[0];
    const cx_double b = state[1];
    const cx_double cross = std::conj(a) * b;
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(a) - std::norm(b)};
}

} // namespace qaoaws
